#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fprover/clause.hpp"
#include "fprover/symbols.hpp"

namespace fpr {

inline constexpr int kSymbolHashDims = 16;
inline constexpr int kSpectralDims = 8;
inline constexpr size_t kMaxGraphNodes = 256;

enum class NodeType : uint8_t { Clause, Literal, Atom, Term };
const char* node_type_name(NodeType t);  // clause / literal / atom / term

// One syntax-graph node. The symbol text is "|" for clause nodes, "~" or "+"
// for literal nodes (by polarity), the predicate name for atoms, and the
// functor or canonical variable name for term nodes.
struct GraphNode {
  NodeType type = NodeType::Term;
  std::string symbol;
  std::array<double, kSymbolHashDims> symbol_hash{};
  std::vector<double> spectral;  // k entries, zero-padded
};

// Undirected syntax graph of the target clause plus the negated-conjecture
// clauses, rooted at the target's clause node (node 0); conjecture clause
// nodes hang off the root so the graph is connected. Nodes are in
// breadth-first order from the root, capped at kMaxGraphNodes with edges to
// dropped nodes removed.
struct ClauseGraph {
  std::vector<GraphNode> nodes;
  std::vector<std::pair<uint32_t, uint32_t>> edges;  // endpoints ascending
};

ClauseGraph clause_graph(const Clause& target,
                         const std::vector<Clause>& conjectures,
                         const SymbolTable& symbols, int k = kSpectralDims);

// Deterministic 16-dim standard-normal feature vector of a symbol's text.
std::array<double, kSymbolHashDims> symbol_hash(std::string_view text);

struct EigenPair {
  double value;
  std::vector<double> vector;
};

// Every Laplacian (L = D - A) eigenpair of the graph, eigenvalues ascending,
// each eigenvector's largest-magnitude entry made positive. Near-degenerate
// values (gap below 1e-9) keep the eigensolver's order.
std::vector<EigenPair> laplacian_eigenpairs(
    size_t num_nodes, const std::vector<std::pair<uint32_t, uint32_t>>& edges);

// Per-node spectral coordinates: entries of the k eigenvectors with smallest
// nonzero eigenvalues, zero-padded when fewer exist. Disconnected graphs get
// per-component encodings (each component decomposed on its own).
std::vector<std::vector<double>> spectral_encodings(
    size_t num_nodes, const std::vector<std::pair<uint32_t, uint32_t>>& edges,
    int k);

}  // namespace fpr
