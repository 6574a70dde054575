#pragma once

// Verification suites behind `jacobi_cli verify`.

#include <optional>
#include <string>
#include <vector>

#include "jacobi/ido.hpp"
#include "jacobi/report.hpp"

namespace jacobi {

struct SuiteOptions {
  unsigned N = 1;
  std::optional<GaussianRational> k;  // nullopt: symbolic
  std::optional<unsigned> degree;
};

/// lie, pbw, ido, relations, center, characters, embedding, modules, isos.
const std::vector<std::string>& suite_names();
/// DomainError for an unknown suite name. The report's seconds field is filled in.
VerifyReport run_suite(const std::string& name, const SuiteOptions& options);

/// Jacobi identity up to rank max_N in both bases, and the automorphisms.
VerifyReport verify_lie(unsigned max_N);
/// Normal ordering, Casimir identities and the rank-one nu map.
VerifyReport verify_pbw();
/// Basis conversion, theta~ and the gl_N copy on monomials of degree <= d.
VerifyReport verify_ido(const IdoConfig& cfg, unsigned degree);
/// Relation families; at N = 1 the weight and product relations and their theta~ images.
VerifyReport verify_relations(const IdoConfig& cfg);
/// Centrality of C and the commutant of the generators up to degree d.
VerifyReport verify_center(const IdoConfig& cfg, unsigned degree);
VerifyReport verify_characters(const IdoConfig& cfg);
/// Weight modules over a parameter grid at the given k, and restrictions of L(n).
VerifyReport verify_modules(const GaussianRational& k);

}  // namespace jacobi
