#include "fprover/clause_graph.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

#include <Eigen/Dense>

namespace fpr {

namespace {

// Eigenvalues at or below this are the zero modes (one per component).
constexpr double kZeroEigenvalueTolerance = 1e-9;

uint64_t fnv1a64(std::string_view text) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// (0, 1]: never returns 0, so the log below is safe.
double unit_open(uint64_t bits) {
  return (double(bits >> 11) + 1.0) * 0x1.0p-53;
}

struct GraphBuilder {
  const SymbolTable& symbols;
  std::vector<GraphNode>& nodes;
  std::vector<std::pair<uint32_t, uint32_t>>& edges;

  struct Task {
    enum class Kind : uint8_t { ClauseNode, LiteralNode, TermNode } kind;
    uint32_t node;
    const Clause* clause = nullptr;
    const Literal* literal = nullptr;
    Term term = Term::variable(0);
  };
  std::deque<Task> queue;

  // Children are appended in discovery order, so node indices follow the
  // breadth-first order the cap is defined over.
  uint32_t add_node(NodeType type, std::string symbol, uint32_t parent) {
    uint32_t id = uint32_t(nodes.size());
    GraphNode n;
    n.type = type;
    n.symbol = std::move(symbol);
    nodes.push_back(std::move(n));
    edges.emplace_back(parent, id);
    return id;
  }

  bool full() const { return nodes.size() >= kMaxGraphNodes; }

  void expand(const Task& t) {
    switch (t.kind) {
      case Task::Kind::ClauseNode:
        for (const Literal& lit : t.clause->literals()) {
          if (full()) return;
          uint32_t id = add_node(NodeType::Literal, lit.positive ? "+" : "~", t.node);
          queue.push_back({Task::Kind::LiteralNode, id, nullptr, &lit});
        }
        break;
      case Task::Kind::LiteralNode: {
        if (full()) return;
        const Term& atom = t.literal->atom;
        uint32_t id = add_node(NodeType::Atom, symbols.name(atom.functor()), t.node);
        for (const Term& arg : atom.args())
          queue.push_back({Task::Kind::TermNode, id, nullptr, nullptr, arg});
        break;
      }
      case Task::Kind::TermNode: {
        if (full()) return;
        const Term& term = t.term;
        std::string text = term.is_variable() ? "X" + std::to_string(term.var())
                                              : symbols.name(term.functor());
        uint32_t id = add_node(NodeType::Term, std::move(text), t.node);
        if (!term.is_variable())
          for (const Term& arg : term.args())
            queue.push_back({Task::Kind::TermNode, id, nullptr, nullptr, arg});
        break;
      }
    }
  }
};

std::vector<std::vector<uint32_t>> adjacency(
    size_t num_nodes, const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
  std::vector<std::vector<uint32_t>> adj(num_nodes);
  for (auto [a, b] : edges) {
    if (a >= num_nodes || b >= num_nodes)
      throw std::invalid_argument("spectral: edge endpoint out of range");
    if (a == b) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

void fix_sign(std::vector<double>& v) {
  size_t best = 0;
  for (size_t i = 1; i < v.size(); ++i)
    if (std::fabs(v[i]) > std::fabs(v[best])) best = i;
  if (v[best] < 0.0)
    for (double& x : v) x = -x;
}

}  // namespace

const char* node_type_name(NodeType t) {
  switch (t) {
    case NodeType::Clause: return "clause";
    case NodeType::Literal: return "literal";
    case NodeType::Atom: return "atom";
    case NodeType::Term: return "term";
  }
  return "?";
}

std::array<double, kSymbolHashDims> symbol_hash(std::string_view text) {
  uint64_t state = fnv1a64(text);
  std::array<double, kSymbolHashDims> out{};
  for (int i = 0; i < kSymbolHashDims; i += 2) {
    double u1 = unit_open(splitmix64(state));
    double u2 = unit_open(splitmix64(state));
    double r = std::sqrt(-2.0 * std::log(u1));
    out[i] = r * std::cos(2.0 * M_PI * u2);
    out[i + 1] = r * std::sin(2.0 * M_PI * u2);
  }
  return out;
}

std::vector<EigenPair> laplacian_eigenpairs(
    size_t num_nodes, const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
  if (num_nodes == 0) return {};
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(Eigen::Index(num_nodes),
                                            Eigen::Index(num_nodes));
  for (auto [a, b] : edges) {
    if (a >= num_nodes || b >= num_nodes)
      throw std::invalid_argument("spectral: edge endpoint out of range");
    if (a == b) continue;
    l(a, b) -= 1.0;
    l(b, a) -= 1.0;
    l(a, a) += 1.0;
    l(b, b) += 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("spectral: eigendecomposition failed");

  std::vector<EigenPair> out(num_nodes);
  for (size_t i = 0; i < num_nodes; ++i) {
    out[i].value = solver.eigenvalues()(Eigen::Index(i));
    out[i].vector.resize(num_nodes);
    for (size_t r = 0; r < num_nodes; ++r)
      out[i].vector[r] = solver.eigenvectors()(Eigen::Index(r), Eigen::Index(i));
    fix_sign(out[i].vector);
  }
  return out;
}

std::vector<std::vector<double>> spectral_encodings(
    size_t num_nodes, const std::vector<std::pair<uint32_t, uint32_t>>& edges,
    int k) {
  if (k < 0) throw std::invalid_argument("spectral: k must be nonnegative");
  std::vector<std::vector<double>> enc(num_nodes, std::vector<double>(k, 0.0));
  if (num_nodes == 0 || k == 0) return enc;

  auto adj = adjacency(num_nodes, edges);
  std::vector<int> component(num_nodes, -1);
  int num_components = 0;
  for (size_t start = 0; start < num_nodes; ++start) {
    if (component[start] >= 0) continue;
    int c = num_components++;
    std::deque<size_t> frontier{start};
    component[start] = c;
    while (!frontier.empty()) {
      size_t u = frontier.front();
      frontier.pop_front();
      for (uint32_t v : adj[u])
        if (component[v] < 0) {
          component[v] = c;
          frontier.push_back(v);
        }
    }
  }

  for (int c = 0; c < num_components; ++c) {
    std::vector<uint32_t> members;
    std::vector<uint32_t> local(num_nodes, 0);
    for (size_t i = 0; i < num_nodes; ++i)
      if (component[i] == c) {
        local[i] = uint32_t(members.size());
        members.push_back(uint32_t(i));
      }
    std::vector<std::pair<uint32_t, uint32_t>> sub_edges;
    for (auto [a, b] : edges)
      if (a != b && component[a] == c)
        sub_edges.emplace_back(local[a], local[b]);

    auto pairs = laplacian_eigenpairs(members.size(), sub_edges);
    size_t taken = 0;
    for (const EigenPair& p : pairs) {
      if (p.value <= kZeroEigenvalueTolerance) continue;
      if (taken == size_t(k)) break;
      for (size_t m = 0; m < members.size(); ++m)
        enc[members[m]][taken] = p.vector[m];
      ++taken;
    }
  }
  return enc;
}

ClauseGraph clause_graph(const Clause& target,
                         const std::vector<Clause>& conjectures,
                         const SymbolTable& symbols, int k) {
  ClauseGraph g;
  GraphBuilder builder{symbols, g.nodes, g.edges, {}};

  GraphNode root;
  root.type = NodeType::Clause;
  root.symbol = "|";
  g.nodes.push_back(std::move(root));
  builder.queue.push_back({GraphBuilder::Task::Kind::ClauseNode, 0, &target});

  for (const Clause& conj : conjectures) {
    if (builder.full()) break;
    uint32_t id = builder.add_node(NodeType::Clause, "|", 0);
    builder.queue.push_back({GraphBuilder::Task::Kind::ClauseNode, id, &conj});
  }
  while (!builder.queue.empty()) {
    GraphBuilder::Task t = std::move(builder.queue.front());
    builder.queue.pop_front();
    builder.expand(t);
  }

  for (GraphNode& n : g.nodes) n.symbol_hash = symbol_hash(n.symbol);
  auto enc = spectral_encodings(g.nodes.size(), g.edges, k);
  for (size_t i = 0; i < g.nodes.size(); ++i) g.nodes[i].spectral = std::move(enc[i]);
  return g;
}

}  // namespace fpr
