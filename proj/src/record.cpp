#include "qru/record.hpp"

#include <cstdio>
#include <sstream>

#include "qru/rational.hpp"

namespace qru {

std::vector<std::string> coordinate_strings(const Cyclotomic& value) {
  std::vector<std::string> out;
  for (const Rational& c : value.canonical_coords()) out.push_back(fraction_string(c));
  return out;
}

VerificationRecord make_value_record(const std::string& identity, int family,
                                     long long p, long long M, long long N,
                                     const Cyclotomic& lhs,
                                     const Cyclotomic& rhs) {
  VerificationRecord r;
  r.identity = identity;
  r.family = family;
  r.p = p;
  r.M = M;
  r.N = N;
  r.L = lhs.order();
  r.pass = (lhs == rhs);
  r.lhs = coordinate_strings(lhs);
  r.rhs = coordinate_strings(rhs);
  r.lhs_text = lhs.str("z");
  r.rhs_text = rhs.str("z");
  return r;
}

VerificationRecord make_flag_record(const std::string& identity, int family,
                                    long long p, long long M, long long N,
                                    long long L, bool pass) {
  VerificationRecord r;
  r.identity = identity;
  r.family = family;
  r.p = p;
  r.M = M;
  r.N = N;
  r.L = L;
  r.pass = pass;
  return r;
}

std::vector<std::string> laurent_term_strings(const LaurentPoly& f) {
  std::vector<std::string> out;
  for (const auto& [e, c] : f.terms())
    out.push_back(std::to_string(e) + ":" + fraction_string(c));
  return out;
}

VerificationRecord make_poly_record(const std::string& identity, int family,
                                    long long p, long long N,
                                    const LaurentPoly& lhs,
                                    const LaurentPoly& rhs) {
  VerificationRecord r;
  r.identity = identity;
  r.family = family;
  r.p = p;
  r.N = N;
  r.pass = (lhs == rhs);
  r.lhs = laurent_term_strings(lhs);
  r.rhs = laurent_term_strings(rhs);
  r.lhs_text = lhs.str();
  r.rhs_text = rhs.str();
  return r;
}

namespace {

void append_json_string(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void append_json_string_array(std::string& out, const std::vector<std::string>& v) {
  out += '[';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    append_json_string(out, v[i]);
  }
  out += ']';
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string record_to_json(const VerificationRecord& r) {
  std::string out = "{\"suite\":";
  append_json_string(out, r.suite);
  out += ",\"identity\":";
  append_json_string(out, r.identity);
  out += ",\"family\":" + std::to_string(r.family);
  out += ",\"p\":" + std::to_string(r.p);
  out += ",\"M\":" + std::to_string(r.M);
  out += ",\"N\":" + std::to_string(r.N);
  out += ",\"L\":" + std::to_string(r.L);
  out += std::string(",\"pass\":") + (r.pass ? "true" : "false");
  out += ",\"lhs\":";
  append_json_string_array(out, r.lhs);
  out += ",\"rhs\":";
  append_json_string_array(out, r.rhs);
  out += ",\"elapsed_ms\":" + std::to_string(r.elapsed_ms);
  out += "}";
  return out;
}

std::string csv_header() {
  return "suite,identity,family,p,M,N,L,pass,elapsed_ms";
}

std::string record_to_csv(const VerificationRecord& r) {
  std::ostringstream out;
  out << csv_escape(r.suite) << ',' << csv_escape(r.identity) << ',' << r.family
      << ',' << r.p << ',' << r.M << ',' << r.N << ',' << r.L << ','
      << (r.pass ? "true" : "false") << ',' << r.elapsed_ms;
  return out.str();
}

std::string record_to_human(const VerificationRecord& r) {
  std::ostringstream out;
  out << (r.pass ? "pass" : "FAIL") << "  " << r.suite << "  " << r.identity;
  if (r.family) out << "  family=" << r.family;
  if (r.p) out << "  p=" << r.p;
  out << "  M=" << r.M << "  N=" << r.N << "  L=" << r.L;
  if (!r.lhs_text.empty() && r.rhs_text.empty()) {
    out << "\n    value: " << r.lhs_text;
  } else if (!r.lhs_text.empty() || !r.rhs_text.empty()) {
    out << "\n    lhs: " << r.lhs_text << "\n    rhs: " << r.rhs_text;
  }
  return out.str();
}

}  // namespace qru
