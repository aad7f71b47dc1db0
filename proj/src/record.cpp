#include "polymod/record.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "polymod/elliptic.hpp"

namespace polymod {

namespace {

double ratio_residual(const Modulus& lambda, double H) { return (2.0 * k_ratio(lambda) - H) / H; }

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

std::string json_number(double v) { return std::isfinite(v) ? format_double(v) : "null"; }

}  // namespace

OutputRecord make_record(const PentominoSolution& s) {
  OutputRecord rec{Shape::pentomino, s.H, {}, {}};
  rec.fields = {{"lambda", s.lambda.k()},
                {"lambda_prime", s.lambda.complement()},
                {"a", s.a},
                {"alpha0", s.alpha0},
                {"c2", s.c2},
                {"alpha1", s.alpha1},
                {"alpha2", s.alpha2},
                {"alpha3", s.alpha3},
                {"beta1", s.beta1},
                {"beta2", s.beta2},
                {"beta3", s.beta3},
                {"mu", s.mu.k()},
                {"mu_prime", s.mu.complement()},
                {"module", s.module}};
  const PentominoResiduals r = root_residuals(s);
  rec.diag = {{"ratio_residual", ratio_residual(s.lambda, s.H)},
              {"g_residual", pentomino_g(s.a, s.alpha0)},
              {"h_alpha1_rel", r.alpha1},
              {"h_alpha2_rel", r.alpha2},
              {"h_alpha3_rel", r.alpha3},
              {"mu_gap", std::abs(s.mu.k() - std::sqrt(s.beta2 / s.beta3))},
              {"asymptote_gap", s.module - 0.5 * s.H}};
  return rec;
}

OutputRecord make_record(const TetrominoSolution& s) {
  OutputRecord rec{Shape::tetromino, s.H, {}, {}};
  const double lam = s.lambda.k();
  rec.fields = {{"lambda", lam},
                {"lambda_prime", s.lambda.complement()},
                {"alpha0", s.alpha0},
                {"alpha1", s.alpha1},
                {"alpha2", s.alpha2},
                {"c", s.alpha2},
                {"alpha3", s.alpha3},
                {"beta1", s.beta1},
                {"beta2", s.beta2},
                {"beta3", s.beta3},
                {"A", s.A},
                {"mu", s.mu.k()},
                {"mu_prime", s.mu.complement()},
                {"module", s.module}};
  const TetrominoResiduals r = root_residuals(s);
  const double cross = s.beta1 * (s.beta3 - s.beta2) / (s.beta2 * (s.beta3 - s.beta1));
  rec.diag = {{"ratio_residual", ratio_residual(s.lambda, s.H)},
              {"r_residual", tetromino_r(lam, s.alpha0)},
              {"h_alpha1_rel", r.alpha1},
              {"h_alpha3_rel", r.alpha3},
              {"cross_ratio_gap", std::abs(s.A * s.A - cross)},
              {"mu_gap", std::abs(s.mu.k() - (1.0 - s.A) / (1.0 + s.A))},
              {"asymptote_gap", s.module - s.H}};
  return rec;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json(const OutputRecord& rec) {
  std::ostringstream os;
  os << "{\"shape\": " << json_string(std::string(shape_name(rec.shape))) << ", \"H\": " << json_number(rec.H);
  for (const auto& [k, v] : rec.fields) os << ", " << json_string(k) << ": " << json_number(v);
  os << ", \"diag\": {";
  for (std::size_t i = 0; i < rec.diag.size(); ++i) {
    os << (i ? ", " : "") << json_string(rec.diag[i].first) << ": " << json_number(rec.diag[i].second);
  }
  os << "}}";
  return os.str();
}

std::string to_json(const std::vector<OutputRecord>& recs) {
  std::string out = "[";
  for (std::size_t i = 0; i < recs.size(); ++i) out += (i ? ",\n " : "") + to_json(recs[i]);
  return out + "]";
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_header(const OutputRecord& rec) {
  std::string out = "shape,H";
  for (const auto& f : rec.fields) out += "," + csv_quote(f.first);
  for (const auto& d : rec.diag) out += "," + csv_quote("diag_" + d.first);
  return out;
}

std::string csv_row(const OutputRecord& rec) {
  std::string out = csv_quote(std::string(shape_name(rec.shape))) + "," + format_double(rec.H);
  for (const auto& f : rec.fields) out += "," + format_double(f.second);
  for (const auto& d : rec.diag) out += "," + format_double(d.second);
  return out;
}

std::string to_table(const OutputRecord& rec) {
  std::size_t width = 2;
  for (const auto& f : rec.fields) width = std::max(width, f.first.size());
  for (const auto& d : rec.diag) width = std::max(width, d.first.size() + 5);
  std::ostringstream os;
  auto line = [&](const std::string& k, const std::string& v) {
    os << k << std::string(width + 2 - k.size(), ' ') << v << "\n";
  };
  line("shape", std::string(shape_name(rec.shape)));
  line("H", format_double(rec.H));
  for (const auto& [k, v] : rec.fields) line(k, format_double(v));
  for (const auto& [k, v] : rec.diag) line("diag." + k, format_double(v));
  return os.str();
}

std::string to_table(const std::vector<OutputRecord>& recs) {
  if (recs.empty()) return {};
  std::vector<std::string> cols = {"H"};
  for (const auto& f : recs.front().fields) cols.push_back(f.first);
  cols.push_back("asymptote_gap");
  std::ostringstream os;
  constexpr int kWidth = 25;
  for (const auto& c : cols) os << c << std::string(c.size() < kWidth ? kWidth - c.size() : 1, ' ');
  os << "\n";
  for (const auto& rec : recs) {
    std::vector<double> vals = {rec.H};
    for (const auto& f : rec.fields) vals.push_back(f.second);
    double gap = 0.0;
    for (const auto& d : rec.diag) {
      if (d.first == "asymptote_gap") gap = d.second;
    }
    vals.push_back(gap);
    for (double v : vals) {
      const std::string s = format_double(v);
      os << s << std::string(s.size() < kWidth ? kWidth - s.size() : 1, ' ');
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace polymod
