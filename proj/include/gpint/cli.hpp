#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gpint/ball_export.hpp"
#include "gpint/coxeter.hpp"
#include "gpint/geometry.hpp"
#include "gpint/oracle.hpp"
#include "gpint/parabolic.hpp"
#include "gpint/spec.hpp"
#include "gpint/words.hpp"

namespace gpint::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("io-error", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string spec_stem(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

inline GroupSpec load_group_spec(const std::string& path) {
  std::string text = read_file(path);
  if (is_coxeter_file(text))
    fail("spec-mismatch", "'" + path + "' is a coxeter spec; use the cox subcommands");
  return parse_group_spec(text);
}

inline CoxeterSpec load_coxeter_spec(const std::string& path) {
  std::string text = read_file(path);
  if (!is_coxeter_file(text))
    fail("spec-mismatch", "'" + path + "' is not a coxeter spec");
  return parse_coxeter_spec(text);
}

inline std::string format_syllable_set(const std::vector<Syllable>& set, const GroupSpec& spec) {
  std::string out = "{";
  for (size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += format_syllable(set[i], spec);
  }
  return out + "}";
}

inline std::vector<NormalForm> read_chamber_file(const std::string& path,
                                                 const GroupSpec& spec) {
  std::vector<NormalForm> chambers;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    chambers.push_back(parse_chamber(line, spec));
  }
  return chambers;
}

inline std::vector<CampaignInstance> read_instance_file(const std::string& path,
                                                        const GroupSpec& spec) {
  std::vector<CampaignInstance> out;
  std::istringstream in(read_file(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string i_field, gamma_field, j_field;
    if (!(ls >> i_field)) continue;
    if (!(ls >> gamma_field >> j_field))
      fail("parse-error", "instance line " + std::to_string(lineno) +
                              " must be '<I> <gamma> <J>' (gamma dotted)");
    CampaignInstance inst;
    inst.left_types = parse_gen_set(i_field, spec);
    std::replace(gamma_field.begin(), gamma_field.end(), '.', ' ');
    inst.gamma = parse_chamber(gamma_field, spec);
    inst.right_types = parse_gen_set(j_field, spec);
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace detail

// Drives one invocation; stdout/stderr are injected so transcripts can be
// captured byte-for-byte. Exit codes: 0 success, 1 domain error or
// verification failure, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graph-product chamber geometry and parabolic intersections", "gpint"};
  app.require_subcommand(1);

  struct {
    std::string spec_path, word1, word2;
    std::string base, types, types_i, types_j, gamma, p1, p2, wall, file, format = "dot";
    bool right = false;
    int radius = 3;
    int trials = 50;
    std::uint64_t seed = 1;
    std::int64_t exp_cap = 2;
  } o;

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("spec", o.spec_path, "spec file")->required();
  };

  CLI::App* normalize = app.add_subcommand("normalize", "canonical form of a word");
  add_spec(normalize);
  normalize->add_option("word", o.word1)->required();

  CLI::App* mul = app.add_subcommand("mul", "product of two words");
  add_spec(mul);
  mul->add_option("w1", o.word1)->required();
  mul->add_option("w2", o.word2)->required();

  CLI::App* inv = app.add_subcommand("inv", "inverse of a word");
  add_spec(inv);
  inv->add_option("word", o.word1)->required();

  CLI::App* len = app.add_subcommand("len", "syllable length");
  add_spec(len);
  len->add_option("word", o.word1)->required();

  CLI::App* dist = app.add_subcommand("dist", "gallery distance between chambers");
  add_spec(dist);
  dist->add_option("w1", o.word1)->required();
  dist->add_option("w2", o.word2)->required();

  CLI::App* descents = app.add_subcommand("descents", "left (or right) descent syllables");
  add_spec(descents);
  descents->add_option("word", o.word1)->required();
  descents->add_flag("--right", o.right, "right descents instead of left");

  CLI::App* project = app.add_subcommand("project", "project a chamber onto a sector");
  add_spec(project);
  project->add_option("--base", o.base, "sector base chamber")->required();
  project->add_option("--types", o.types, "sector type set")->required();
  project->add_option("chamber", o.word1)->required();

  CLI::App* walls = app.add_subcommand("walls", "building-walls separating two chambers");
  add_spec(walls);
  walls->add_option("w1", o.word1)->required();
  walls->add_option("w2", o.word2)->required();

  CLI::App* dial = app.add_subcommand("dial", "dial index of a chamber relative to a wall");
  add_spec(dial);
  dial->add_option("--wall", o.wall, "wall as '<type>,<rep word>'")->required();
  dial->add_option("chamber", o.word1)->required();

  CLI::App* intersect = app.add_subcommand("intersect", "intersection of two parabolics");
  add_spec(intersect);
  intersect->add_option("--p1", o.p1, "parabolic '<conj>,<types>'")->required();
  intersect->add_option("--p2", o.p2, "parabolic '<conj>,<types>'")->required();

  CLI::App* cplus = app.add_subcommand("cplus", "projection of a sector onto a sector");
  add_spec(cplus);
  cplus->add_option("--types-i", o.types_i)->required();
  cplus->add_option("--gamma", o.gamma)->required();
  cplus->add_option("--types-j", o.types_j)->required();

  CLI::App* recognize = app.add_subcommand("recognize", "decide whether a chamber set is a sector ball");
  add_spec(recognize);
  recognize->add_option("--chambers", o.file, "file with one chamber word per line")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the intersection-theorem verifier");
  add_spec(verify);
  verify->add_option("--radius", o.radius);
  verify->add_option("--trials", o.trials);
  verify->add_option("--seed", o.seed);
  verify->add_option("--exp-cap", o.exp_cap);
  verify->add_option("--instances", o.file, "explicit '<I> <gamma> <J>' instance file");

  CLI::App* export_ball = app.add_subcommand("export-ball", "emit the chamber-graph ball");
  add_spec(export_ball);
  export_ball->add_option("--radius", o.radius);
  export_ball->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}));
  export_ball->add_option("--exp-cap", o.exp_cap);
  export_ball->add_option("--wall", o.wall, "color vertices by dial relative to this wall");

  CLI::App* cox = app.add_subcommand("cox", "Coxeter-group variants (coxeter spec files)");
  cox->require_subcommand(1);
  CLI::App* cnormalize = cox->add_subcommand("normalize");
  add_spec(cnormalize);
  cnormalize->add_option("word", o.word1)->required();
  CLI::App* cmul = cox->add_subcommand("mul");
  add_spec(cmul);
  cmul->add_option("w1", o.word1)->required();
  cmul->add_option("w2", o.word2)->required();
  CLI::App* cinv = cox->add_subcommand("inv");
  add_spec(cinv);
  cinv->add_option("word", o.word1)->required();
  CLI::App* clen = cox->add_subcommand("len");
  add_spec(clen);
  clen->add_option("word", o.word1)->required();
  CLI::App* cdist = cox->add_subcommand("dist");
  add_spec(cdist);
  cdist->add_option("w1", o.word1)->required();
  cdist->add_option("w2", o.word2)->required();
  CLI::App* cdescents = cox->add_subcommand("descents");
  add_spec(cdescents);
  cdescents->add_option("word", o.word1)->required();
  cdescents->add_flag("--right", o.right);
  CLI::App* cintersect = cox->add_subcommand("intersect");
  add_spec(cintersect);
  cintersect->add_option("--p1", o.p1)->required();
  cintersect->add_option("--p2", o.p2)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "gpint: error[usage]: " << e.what() << "\n";
    return 2;
  }

  try {
    if (normalize->parsed()) {
      GroupSpec spec = detail::load_group_spec(o.spec_path);
      out << format_nf(parse_chamber(o.word1, spec), spec) << "\n";
    } else if (mul->parsed()) {
      GroupSpec spec = detail::load_group_spec(o.spec_path);
      out << format_nf(multiply(parse_chamber(o.word1, spec), parse_chamber(o.word2, spec), spec),
                       spec)
          << "\n";
    } else if (inv->parsed()) {
      GroupSpec spec = detail::load_group_spec(o.spec_path);
      out << format_nf(invert(parse_chamber(o.word1, spec), spec), spec) << "\n";
    } else if (len->parsed()) {
      GroupSpec spec = detail::load_group_spec(o.spec_path);
      out << syllable_length(parse_chamber(o.word1, spec)) << "\n";
    } else if (dist->parsed()) {
      GroupSpec spec = detail::load_group_spec(o.spec_path);
      out << distance(parse_chamber(o.word1, spec), parse_chamber(o.word2, spec), spec) << "\n";
    } else if (descents->parsed()) {
      GroupSpec spec = detail::load_group_spec(o.spec_path);
      NormalForm x = parse_chamber(o.word1, spec);
      auto set = o.right ? right_descents(x, spec) : left_descents(x, spec);
      out << detail::format_syllable_set(set, spec) << "\n";
    } else if (project->parsed()) {
      GroupSpec spec = detail::load_group_spec(o.spec_path);
      SectorRef sector =
          make_sector(parse_chamber(o.base, spec), parse_gen_set(o.types, spec), spec);
      out << format_nf(project_to_sector(parse_chamber(o.word1, spec), sector, spec), spec)
          << "\n";
    } else if (walls->parsed()) {
      GroupSpec spec = detail::load_group_spec(o.spec_path);
      for (const auto& w :
           separating_walls(parse_chamber(o.word1, spec), parse_chamber(o.word2, spec), spec))
        out << format_wall(w, spec) << "\n";
    } else if (dial->parsed()) {
      GroupSpec spec = detail::load_group_spec(o.spec_path);
      out << dial_index(parse_wall(o.wall, spec), parse_chamber(o.word1, spec), spec) << "\n";
    } else if (intersect->parsed()) {
      GroupSpec spec = detail::load_group_spec(o.spec_path);
      ParabolicDesc p = intersect_parabolics(parse_parabolic(o.p1, spec),
                                             parse_parabolic(o.p2, spec), spec);
      out << format_parabolic(p, spec) << "\n";
    } else if (cplus->parsed()) {
      GroupSpec spec = detail::load_group_spec(o.spec_path);
      SectorRef s = c_plus(parse_gen_set(o.types_i, spec), parse_chamber(o.gamma, spec),
                           parse_gen_set(o.types_j, spec), spec);
      out << "base=" << format_nf(s.base, spec) << " types=" << format_gen_set(s.types, spec)
          << "\n";
    } else if (recognize->parsed()) {
      GroupSpec spec = detail::load_group_spec(o.spec_path);
      auto match = sector_recognize(detail::read_chamber_file(o.file, spec), spec);
      if (match)
        out << "sector base=" << format_nf(match->sector.base, spec)
            << " types=" << format_gen_set(match->sector.types, spec)
            << " radius=" << match->radius << "\n";
      else
        out << "none\n";
    } else if (verify->parsed()) {
      GroupSpec spec = detail::load_group_spec(o.spec_path);
      CampaignOptions copts;
      copts.radius = o.radius;
      copts.trials = o.trials;
      copts.seed = o.seed;
      copts.exp_cap = o.exp_cap;
      copts.spec_name = detail::spec_stem(o.spec_path);
      CampaignReport report =
          o.file.empty() ? run_campaign(spec, copts)
                         : run_instances(spec, detail::read_instance_file(o.file, spec), copts);
      for (const auto& line : report.lines) out << line << "\n";
      out << "SUMMARY instances=" << report.lines.size() << " failures=" << report.failures
          << "\n";
      return report.failures == 0 ? 0 : 1;
    } else if (export_ball->parsed()) {
      GroupSpec spec = detail::load_group_spec(o.spec_path);
      Ball ball = enumerate_ball(spec, o.radius, o.exp_cap);
      if (o.format == "dot") {
        std::optional<WallId> wall;
        if (!o.wall.empty()) wall = parse_wall(o.wall, spec);
        export_ball_dot(ball, spec, out, wall);
      } else {
        export_ball_json(ball, spec, out);
      }
    } else if (cox->parsed()) {
      CoxeterSpec cs = detail::load_coxeter_spec(o.spec_path);
      if (cnormalize->parsed()) {
        out << format_cox_word(cox_reduce(parse_cox_word(o.word1, cs), cs), cs) << "\n";
      } else if (cmul->parsed()) {
        out << format_cox_word(
                   cox_multiply(parse_cox_word(o.word1, cs), parse_cox_word(o.word2, cs), cs), cs)
            << "\n";
      } else if (cinv->parsed()) {
        out << format_cox_word(cox_invert(parse_cox_word(o.word1, cs), cs), cs) << "\n";
      } else if (clen->parsed()) {
        out << cox_length(parse_cox_word(o.word1, cs), cs) << "\n";
      } else if (cdist->parsed()) {
        CoxWord x = parse_cox_word(o.word1, cs), y = parse_cox_word(o.word2, cs);
        out << cox_multiply(cox_invert(x, cs), y, cs).size() << "\n";
      } else if (cdescents->parsed()) {
        GenSet d = o.right ? cox_right_descents(parse_cox_word(o.word1, cs), cs)
                           : cox_left_descents(parse_cox_word(o.word1, cs), cs);
        out << format_gen_set(d, cs) << "\n";
      } else if (cintersect->parsed()) {
        auto parse_cox_parabolic = [&](const std::string& text) {
          auto comma = text.find(',');
          if (comma == std::string::npos)
            fail("parse-error", "parabolic must be written '<conjugator>,<types>'");
          return make_cox_parabolic(parse_cox_word(text.substr(0, comma), cs),
                                    parse_gen_set(text.substr(comma + 1), cs), cs);
        };
        CoxParabolic p1 = parse_cox_parabolic(o.p1);
        CoxParabolic p2 = parse_cox_parabolic(o.p2);
        // general conjugators reduce to the theorem form through γ = a⁻¹b
        CoxWord gamma = cox_multiply(cox_invert(p1.conjugator, cs), p2.conjugator, cs);
        CoxParabolic res = cox_intersect(p1.types, gamma, p2.types, cs);
        CoxParabolic shifted =
            make_cox_parabolic(cox_multiply(p1.conjugator, res.conjugator, cs), res.types, cs);
        out << "conjugator=" << format_cox_word(shifted.conjugator, cs)
            << " types=" << format_gen_set(shifted.types, cs) << "\n";
      }
    }
  } catch (const Error& e) {
    err << "gpint: error[" << e.code() << "]: " << e.what() << "\n";
    return e.code() == "usage" ? 2 : 1;
  }
  return 0;
}

}  // namespace gpint::cli
