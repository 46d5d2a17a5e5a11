#pragma once

#include <functional>
#include <string>
#include <vector>

#include "emtrans/formula.hpp"

namespace emtrans {

/// All formulas over the given atoms (plus bot) of exactly each odd weight up
/// to max_weight, in a deterministic generation order.
std::vector<std::vector<Formula>> formulas_by_weight(
    const std::vector<std::string>& atoms, int max_weight);

/// Streams every sequent with at most two antecedent formulas and one
/// succedent whose total weight stays within the bound. Duplicate-free:
/// the two-antecedent case is emitted with an ordered pair of generation
/// indices. Throws std::invalid_argument on empty atoms or max_weight < 2.
void enumerate_sequents(const std::vector<std::string>& atoms, int max_weight,
                        const std::function<void(const ClassicalSequent&)>& fn);

std::vector<ClassicalSequent> enumerate_sequents(
    const std::vector<std::string>& atoms, int max_weight);

}  // namespace emtrans
