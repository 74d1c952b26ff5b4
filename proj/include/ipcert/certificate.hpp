/*
   Copyright 2026 The ipcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef IPCERT_CERTIFICATE_HPP
#define IPCERT_CERTIFICATE_HPP

#include <stdexcept>
#include <string>

#include "ipcert/criteria.hpp"

namespace ipcert {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCertificateFormat = "ipcert.v1";

struct PrimalityMode {
  PrimalityRegime regime = PrimalityRegime::kDeterministic;
  unsigned rounds = 0;  // engaged only in the probable regime

  bool operator==(const PrimalityMode&) const = default;
};

/// A self-contained irreducibility claim: the polynomial, the analytic witness
/// and the arithmetic witness, sealed by a digest over the canonical bytes and
/// the shifted coefficients. verify() re-derives every condition from scratch.
struct Certificate {
  std::string tool_version = kToolVersion;
  Theorem theorem = Theorem::kT1;
  Polynomial polynomial;
  DominanceWitness dominance;
  ArithmeticWitness arithmetic;
  PrimalityMode primality_mode;
  std::string digest;
};

bool operator==(const Certificate& a, const Certificate& b);

/// Structural problems found while parsing certificate bytes (missing or
/// unknown fields, non-string numbers, negative denominators, bad syntax).
class CertificateFormatError : public std::runtime_error {
 public:
  explicit CertificateFormatError(const std::string& what) : std::runtime_error(what) {}
};

Certificate make_certificate(const Polynomial& f, const SearchHit& hit);

/// Canonical JSON: fixed field order, every integer a decimal string,
/// rationals as {"num","den"}, UTF-8, one trailing newline.
std::string serialize(const Certificate& c);

/// Strict parse of canonical JSON; throws CertificateFormatError.
Certificate deserialize(const std::string& bytes);

/// Recomputes every theorem condition, the primality regime, and the digest,
/// sharing no state with the searcher.
CheckReport verify(const Certificate& c);

}  // namespace ipcert

#endif  // IPCERT_CERTIFICATE_HPP
