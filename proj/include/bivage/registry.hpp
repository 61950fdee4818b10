#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bivage/semicopula.hpp"
#include "bivage/univariate.hpp"

namespace bivage {

/// Copula/semi-copula family keys:
///   pi | m | w | clayton:<theta> | gumbel:<theta> | frank:<theta>
///   | arch-gen:<name> | schur:<marginal-key>
/// Unknown keys throw ParseError listing the valid forms.
SemiCopula make_copula(const std::string& key);

/// Named generators for arch-gen: (log, cosine) plus the parametric ones.
Generator make_generator(const std::string& key);

/// Marginal family keys:
///   exp:<rate> | weibull:<shape>[:<scale>] | pareto:<shape>[:<scale>]
///   | mixexp:<r1,r2,...>:<w1,w2,...> | geninv:<generator-key>
SurvivalModel make_marginal(const std::string& key);

std::string copula_keys_help();
std::string marginal_keys_help();

struct ModelSpecEntry {
    std::string id;
    std::string copula;
    std::string marginal;
};

/// Fixed verification registry spanning PMD/NMD x IFR/DFR x IFRA/DFRA.
std::vector<ModelSpecEntry> builtin_registry();

/// Seeded random families (clayton/gumbel/frank x weibull/exp/pareto) for
/// fuzzing; identical output for identical (seed, n).
std::vector<ModelSpecEntry> fuzz_registry(std::uint64_t seed, int n);

} // namespace bivage
