#include <iomanip>
#include <sstream>

#include "patsep/io.hpp"

namespace patsep {

RunReport make_report(std::string algorithm, const Solution& sol, double wall_ms) {
  RunReport r;
  r.algorithm = std::move(algorithm);
  r.verdict = sol.verdict;
  r.witness = sol.patterns;
  r.nodes = sol.stats.nodes;
  r.candidates = sol.stats.candidates;
  r.approximate_size = sol.stats.approximate_size;
  r.wall_ms = wall_ms;
  return r;
}

std::string report_to_text(const RunReport& report, const Alphabet& alphabet) {
  std::ostringstream out;
  out << "# algorithm: " << report.algorithm << '\n';
  out << "# verdict: " << to_string(report.verdict) << '\n';
  out << "# size: " << report.witness.size() << '\n';
  out << "# nodes: " << report.nodes << '\n';
  out << "# candidates: " << report.candidates << '\n';
  if (report.approximate_size) out << "# approximate_size: " << *report.approximate_size << '\n';
  if (report.kernel) {
    const auto& k = *report.kernel;
    out << "# kernel_length: " << k.kernel_length << " of " << k.original_length << '\n';
    out << "# kernel_alphabet: " << k.kernel_alphabet << " of " << k.original_alphabet << '\n';
    out << "# kept_columns:";
    for (auto c : k.kept_columns) out << ' ' << c + 1;
    out << '\n';
  }
  for (const auto& note : report.notes) out << "# note: " << note << '\n';
  out << "# time_ms: " << std::fixed << std::setprecision(3) << report.wall_ms << '\n';
  out << serialize_patterns(report.witness, alphabet);
  return out.str();
}

nlohmann::json report_to_json(const RunReport& report, const Alphabet& alphabet) {
  nlohmann::json j;
  j["algorithm"] = report.algorithm;
  j["verdict"] = std::string(to_string(report.verdict));
  j["size"] = report.witness.size();
  auto witness = nlohmann::json::array();
  for (const auto& p : report.witness) witness.push_back(to_string(p, alphabet));
  j["witness"] = witness;
  j["nodes"] = report.nodes;
  j["candidates"] = report.candidates;
  j["time_ms"] = report.wall_ms;
  if (report.approximate_size) j["approximate_size"] = *report.approximate_size;
  if (report.kernel) {
    const auto& k = *report.kernel;
    auto cols = nlohmann::json::array();
    for (auto c : k.kept_columns) cols.push_back(c + 1);
    j["kernel"] = {{"original_length", k.original_length},
                   {"kernel_length", k.kernel_length},
                   {"original_alphabet", k.original_alphabet},
                   {"kernel_alphabet", k.kernel_alphabet},
                   {"kept_columns", cols}};
  }
  if (!report.notes.empty()) j["notes"] = report.notes;
  return j;
}

}  // namespace patsep
