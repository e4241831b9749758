#pragma once

#include <optional>
#include <ostream>

#include "json.hpp"

#include "gpint/geometry.hpp"
#include "gpint/oracle.hpp"

namespace gpint {

// DOT rendering of a chamber-graph ball, vertices in ShortLex order, edges
// labeled "type^exp". With a wall given, vertices are filled by dial index.
inline void export_ball_dot(const Ball& ball, const GroupSpec& spec, std::ostream& out,
                            const std::optional<WallId>& wall = std::nullopt) {
  out << "graph ball {\n";
  for (size_t i = 0; i < ball.elements.size(); ++i) {
    out << "  n" << i << " [label=\"" << format_nf(ball.elements[i], spec) << "\"";
    if (wall) {
      DialIndex dial = dial_index(*wall, ball.elements[i], spec);
      long palette = 1 + ((dial % 9) + 9) % 9;
      out << " style=filled fillcolor=\"/set19/" << palette << "\"";
    }
    out << "];\n";
  }
  for (const auto& e : ball_edges(ball, spec))
    out << "  n" << e.src << " -- n" << e.dst << " [label=\"" << spec.names[e.gen] << "^"
        << e.exp << "\"];\n";
  out << "}\n";
}

inline void export_ball_json(const Ball& ball, const GroupSpec& spec, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (size_t i = 0; i < ball.elements.size(); ++i) {
    nlohmann::ordered_json v;
    v["id"] = i;
    v["word"] = format_nf(ball.elements[i], spec);
    v["len"] = syllable_length(ball.elements[i]);
    doc["vertices"].push_back(std::move(v));
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : ball_edges(ball, spec)) {
    nlohmann::ordered_json j;
    j["src"] = e.src;
    j["dst"] = e.dst;
    j["type"] = spec.names[e.gen];
    j["exp"] = e.exp;
    doc["edges"].push_back(std::move(j));
  }
  out << doc.dump(2) << "\n";
}

}  // namespace gpint
