#pragma once

// Text, CSV and JSON renderings of invariant reports and check results.

#include <sstream>
#include <string>

#include "hfk/checks.hpp"
#include "hfk/invariants.hpp"
#include "hfk/io.hpp"

namespace hfk {

enum class Format { text, csv, json };

inline Format parse_format(const std::string& s)
{
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw error(errc::invalid_argument, "unknown format '" + s + "' (text, csv, json)");
}

namespace detail {

inline std::string opt_string(const std::optional<Rational>& r) { return r ? to_string(*r) : ""; }
inline std::string opt_string(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

}  // namespace detail

inline json report_to_json(const InvariantReport& rep)
{
  json labels = json::array();
  for (const auto& li : rep.labels) {
    json v = json::object(), h = json::object();
    for (const auto& [s, x] : li.v_table) v[to_string(s)] = x;
    for (const auto& [s, x] : li.h_table) h[to_string(s)] = x;
    labels.push_back({{"label", li.label},
                      {"V", v},
                      {"H", h},
                      {"nu_plus", to_string(li.nu_plus)},
                      {"r", to_string(li.r_balance)},
                      {"r_formula", to_string(li.r_formula)},
                      {"d", to_string(li.d)},
                      {"tau", li.tau ? json(to_string(*li.tau)) : json(nullptr)},
                      {"locally_trivial", li.locally_trivial}});
  }
  return {{"name", rep.name},
          {"labels", labels},
          {"nu_plus", to_string(rep.nu_plus)},
          {"nu_plus_dual", to_string(rep.nu_plus_dual)},
          {"genus_lower_bound", to_string(rep.genus_lower_bound)},
          {"claimed_genus", rep.claimed_genus ? json(to_string(*rep.claimed_genus)) : json(nullptr)},
          {"sharp", rep.sharp ? json(*rep.sharp) : json(nullptr)},
          {"totally_locally_trivial", rep.totally_locally_trivial}};
}

inline std::string render_report(const InvariantReport& rep, Format fmt)
{
  std::ostringstream out;
  switch (fmt) {
    case Format::json: out << report_to_json(rep).dump(2) << "\n"; break;
    case Format::csv:
      out << "label,s,V,H,nu_plus_s,r_s,d_s,tau,nu_plus,nu_plus_dual,genus_bound,sharp\n";
      for (const auto& li : rep.labels)
        for (std::size_t i = 0; i < li.v_table.size(); ++i)
          out << li.label << "," << to_string(li.v_table[i].first) << "," << li.v_table[i].second << ","
              << li.h_table[i].second << "," << to_string(li.nu_plus) << "," << to_string(li.r_balance) << ","
              << to_string(li.d) << "," << detail::opt_string(li.tau) << "," << to_string(rep.nu_plus) << ","
              << to_string(rep.nu_plus_dual) << "," << to_string(rep.genus_lower_bound) << ","
              << detail::opt_string(rep.sharp) << "\n";
      break;
    case Format::text:
      out << rep.name << "\n";
      for (const auto& li : rep.labels) {
        out << "  label " << li.label << ": nu+=" << to_string(li.nu_plus) << " r=" << to_string(li.r_balance)
            << " d=" << to_string(li.d) << " tau=" << (li.tau ? to_string(*li.tau) : "-")
            << (li.locally_trivial ? " locally-trivial" : "") << "\n";
        out << "    s:";
        for (const auto& [s, v] : li.v_table) out << " " << to_string(s);
        out << "\n    V:";
        for (const auto& [s, v] : li.v_table) out << " " << v;
        out << "\n    H:";
        for (const auto& [s, h] : li.h_table) out << " " << h;
        out << "\n";
      }
      out << "  nu+=" << to_string(rep.nu_plus) << " nu+(dual)=" << to_string(rep.nu_plus_dual)
          << " genus>=" << to_string(rep.genus_lower_bound);
      if (rep.claimed_genus)
        out << " claimed=" << to_string(*rep.claimed_genus) << (*rep.sharp ? " (sharp)" : " (not sharp)");
      out << "\n";
      break;
  }
  return out.str();
}

inline json result_to_json(const TheoremCheckResult& r)
{
  return {{"theorem", r.theorem},
          {"inputs", r.inputs},
          {"verdict", verdict_name(r.verdict)},
          {"reason", r.reason},
          {"witness", r.witness}};
}

inline std::string render_result(const TheoremCheckResult& r, Format fmt)
{
  if (fmt == Format::json) return result_to_json(r).dump(2) + "\n";
  std::ostringstream out;
  if (fmt == Format::csv) {
    out << "theorem,verdict,reason\n" << r.theorem << "," << verdict_name(r.verdict) << ",\"" << r.reason << "\"\n";
    return out.str();
  }
  out << r.theorem << " [";
  for (std::size_t i = 0; i < r.inputs.size(); ++i) out << (i ? ", " : "") << r.inputs[i];
  out << "]: " << verdict_name(r.verdict);
  if (!r.reason.empty()) out << " (" << r.reason << ")";
  out << "\n  witness: " << r.witness.dump() << "\n";
  return out.str();
}

}  // namespace hfk
