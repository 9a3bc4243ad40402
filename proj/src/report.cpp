#include "gcensus/report.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <sstream>

namespace gcensus {

namespace {

const char* mode_name(census_mode m) {
  return m == census_mode::graphs ? "graphs" : "sc";
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

census_report make_report(const census_accumulator& acc) {
  census_report r;
  r.n = acc.n;
  r.mode = acc.mode;
  r.lambda = acc.lambda;

  const std::uint64_t nfact = factorial(acc.n);
  for (const auto& [xi, labelled] : histogram(acc).rows) {
    if (xi == 0 || nfact % xi != 0)
      throw consistency_error("coefficient " + std::to_string(xi) +
                              " is not a divisor of " + std::to_string(acc.n) +
                              "!");
    const std::uint64_t product = xi * labelled;
    if (product % nfact != 0)
      throw consistency_error(
          "non-exact unlabelled count: " + std::to_string(xi) + " * " +
          std::to_string(labelled) + " not divisible by " +
          std::to_string(acc.n) + "!");
    r.rows.push_back({xi, labelled, product / nfact});
    r.labelled_total += labelled;
    r.unlabelled_total += product / nfact;
    r.burnside_total += product;
  }
  return r;
}

std::string render_table(const census_report& r) {
  std::ostringstream out;
  out << "census: mode = " << mode_name(r.mode) << ", n = " << r.n
      << ", lambda = " << r.lambda << "\n";

  const auto pair_lines = [&](auto value_of) {
    std::ostringstream block;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      block << (i % 8 == 0 ? (i == 0 ? "  " : "\n  ") : " ");
      block << '(' << r.rows[i].group_order << ',' << value_of(r.rows[i])
            << ')';
    }
    block << '\n';
    return block.str();
  };

  out << "labelled (xi, count):\n"
      << pair_lines([](const census_report::row& w) { return w.labelled; });
  out << "unlabelled (xi, count):\n"
      << pair_lines([](const census_report::row& w) { return w.unlabelled; });
  out << "labelled total:   " << r.labelled_total << "\n";
  out << "unlabelled total: " << r.unlabelled_total << "\n";
  out << "burnside total:   " << r.burnside_total << "\n";
  return out.str();
}

std::string render_csv(const census_report& r) {
  std::ostringstream out;
  out << "group_order,labelled,unlabelled\n";
  for (const census_report::row& w : r.rows)
    out << w.group_order << ',' << w.labelled << ',' << w.unlabelled << '\n';
  out << "# labelled_total," << r.labelled_total << '\n';
  out << "# unlabelled_total," << r.unlabelled_total << '\n';
  out << "# burnside_total," << r.burnside_total << '\n';
  return out.str();
}

std::string render_json(const census_report& r, bool with_timestamp) {
  nlohmann::json j;
  j["n"] = r.n;
  j["mode"] = mode_name(r.mode);
  j["lambda"] = r.lambda;
  j["rows"] = nlohmann::json::array();
  for (const census_report::row& w : r.rows)
    j["rows"].push_back({{"group_order", w.group_order},
                         {"labelled", w.labelled},
                         {"unlabelled", w.unlabelled}});
  j["labelled_total"] = r.labelled_total;
  j["unlabelled_total"] = r.unlabelled_total;
  j["burnside_total"] = r.burnside_total;
  if (with_timestamp) j["generated_at"] = utc_timestamp();
  return j.dump(2) + "\n";
}

std::string render(const census_report& r, report_format f) {
  switch (f) {
    case report_format::table: return render_table(r);
    case report_format::csv: return render_csv(r);
    case report_format::json: return render_json(r);
  }
  throw std::invalid_argument("unknown report format");
}

}  // namespace gcensus
