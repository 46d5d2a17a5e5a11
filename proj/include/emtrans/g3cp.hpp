#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "emtrans/formula.hpp"

namespace emtrans {

enum class CRule : std::uint8_t { Ax, LBot, LAnd, RAnd, LOr, ROr, LImp, RImp };

std::string_view rule_name(CRule r);
std::optional<CRule> crule_from_name(std::string_view name);

/// Node of a classical multi-succedent derivation. For Ax the principal
/// field holds the witnessing variable, for LBot it holds bot.
class CProof {
 public:
  CProof() = default;

  static CProof make(CRule rule, ClassicalSequent conclusion, Formula principal,
                     std::vector<CProof> premises);

  CRule rule() const { return node_->rule; }
  const ClassicalSequent& conclusion() const { return node_->conclusion; }
  const Formula& principal() const { return node_->principal; }
  const std::vector<CProof>& premises() const { return node_->premises; }
  int depth() const { return node_->depth; }
  std::uint64_t node_count() const { return node_->count; }

  explicit operator bool() const { return node_ != nullptr; }
  bool operator==(const CProof& other) const;
  bool operator!=(const CProof& other) const { return !(*this == other); }

 private:
  struct Node {
    CRule rule;
    ClassicalSequent conclusion;
    Formula principal;
    std::vector<CProof> premises;
    int depth;
    std::uint64_t count;
  };
  std::shared_ptr<const Node> node_;
};

/// Schema violation at a node; path is the chain of premise indices from the
/// root, e.g. "/1/0".
struct CheckError {
  std::string path;
  std::string message;
  std::string str() const { return "at '" + path + "': " + message; }
};

/// Validates every node against its rule schema with multiset arithmetic on
/// the contexts. Returns nullopt when the proof is correct.
std::optional<CheckError> check_c(const CProof& p);

using Valuation = std::map<std::string, bool>;

bool eval_formula(const Formula& f, const Valuation& v);

/// Terminating backward search: repeatedly decomposes the first non-leaf
/// formula, antecedent first. All rules are invertible, so no backtracking
/// happens and the result is deterministic. Rejects placeholder-containing
/// input. Returns either a proof or a falsifying valuation.
std::variant<CProof, Valuation> search_c(const ClassicalSequent& s);

/// Brute-force semantic oracle: true iff every valuation of the letters
/// (placeholder treated as an ordinary letter) satisfying all antecedents
/// satisfies some succedent.
bool taut_oracle(const ClassicalSequent& s);

}  // namespace emtrans
