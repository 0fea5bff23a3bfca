#pragma once

#include <string>
#include <vector>

#include "qru/cyclotomic.hpp"

namespace qru {

// One row of a verification report: which statement was checked, at which
// parameters, and whether the two sides agreed.  Value-bearing checks also
// carry the canonical coordinates of both sides; aggregate checks (many
// equalities folded into one pass bit) leave lhs/rhs empty.
struct VerificationRecord {
  std::string suite;     // producing subcommand, set by the driver
  std::string identity;  // short label of the statement checked
  int family = 0;        // nested-sum family, 0 when not applicable
  long long p = 0;       // chain depth, 0 when not applicable
  long long M = 0;
  long long N = 0;
  long long L = 0;  // cyclotomic order used for the comparison
  bool pass = false;
  std::vector<std::string> lhs;  // canonical coordinates as "num/den"
  std::vector<std::string> rhs;
  long long elapsed_ms = 0;
  // Display forms of the two values (polynomials in the order-L root,
  // ascending exponents).  Used by the human format only; never serialized
  // to json/csv.
  std::string lhs_text;
  std::string rhs_text;
};

// Canonical coordinates rendered as "num/den" strings (the denominator is
// always spelled out, so emitted reports re-parse bytewise).
std::vector<std::string> coordinate_strings(const Cyclotomic& value);

// A value-bearing record: pass = (lhs == rhs) in the field, coordinates and
// display text filled from both sides.  The two orders must agree.
VerificationRecord make_value_record(const std::string& identity, int family,
                                     long long p, long long M, long long N,
                                     const Cyclotomic& lhs,
                                     const Cyclotomic& rhs);

// An aggregate record: pass folds many equalities, no single value to show.
VerificationRecord make_flag_record(const std::string& identity, int family,
                                    long long p, long long M, long long N,
                                    long long L, bool pass);

// Nonzero terms of a Laurent polynomial as "exponent:num/den" strings with
// exponents ascending; the empty vector is the zero polynomial.
std::vector<std::string> laurent_term_strings(const LaurentPoly& f);

// A record comparing two exact polynomials in q rather than field values:
// pass = (lhs == rhs) termwise, L = M = 0, sides serialized by
// laurent_term_strings.
VerificationRecord make_poly_record(const std::string& identity, int family,
                                    long long p, long long N,
                                    const LaurentPoly& lhs,
                                    const LaurentPoly& rhs);

// Serializers.  Field order and spacing are fixed so identical records
// always produce identical bytes.
std::string record_to_json(const VerificationRecord& r);
std::string csv_header();
std::string record_to_csv(const VerificationRecord& r);
std::string record_to_human(const VerificationRecord& r);

}  // namespace qru
