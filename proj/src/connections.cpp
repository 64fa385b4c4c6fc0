#include "grlie/connections.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace grlie {

namespace {

void require_symmetric(const SupportGraph& sg) {
  if (!sg.symmetric()) {
    throw HypothesesNotMet({"symmetric_support"},
                           "the support is not closed under inverses");
  }
}

void require_member(const SupportGraph& sg, const GroupElement& g,
                    const char* role) {
  if (!sg.contains(g)) {
    throw std::invalid_argument(std::string(role) + " " + element_to_string(g) +
                                " is not in the support");
  }
}

}  // namespace

SupportGraph SupportGraph::from_algebra(const ValidatedAlgebra& alg) {
  SupportGraph sg;
  sg.group = alg->group();
  sg.elements = support(alg).sigma;
  return sg;
}

bool SupportGraph::symmetric() const {
  for (const auto& g : elements) {
    if (!elements.count(inverse(group, g))) return false;
  }
  return true;
}

ConnectionClass connection_class(const SupportGraph& sg, const GroupElement& g) {
  require_symmetric(sg);
  const GroupElement gr = reduce(sg.group, g);
  require_member(sg, gr, "element");

  std::set<GroupElement> members{gr, inverse(sg.group, gr)};
  bool changed = true;
  while (changed) {
    changed = false;
    // Snapshot so iteration order stays canonical while members grows.
    const std::set<GroupElement> snapshot = members;
    for (const auto& h : snapshot) {
      const GroupElement hinv = inverse(sg.group, h);
      if (!members.count(hinv)) {
        members.insert(hinv);
        changed = true;
      }
      for (const auto& s : sg.elements) {
        const GroupElement hs = multiply(sg.group, h, s);
        if (!sg.contains(hs)) continue;
        if (!members.count(hs)) {
          members.insert(hs);
          changed = true;
        }
        if (!members.count(s)) {
          members.insert(s);
          changed = true;
        }
      }
    }
  }
  return ConnectionClass{*members.begin(), std::move(members)};
}

std::vector<ConnectionClass> connection_classes(const SupportGraph& sg) {
  require_symmetric(sg);
  std::vector<ConnectionClass> classes;
  std::set<GroupElement> seen;
  for (const auto& g : sg.elements) {
    if (seen.count(g)) continue;
    ConnectionClass c = connection_class(sg, g);
    seen.insert(c.members.begin(), c.members.end());
    classes.push_back(std::move(c));
  }
  return classes;
}

std::size_t complete_oracle_depth(const SupportGraph& sg) {
  return sg.elements.size() + 1;
}

std::optional<std::vector<GroupElement>> oracle_connected(
    const SupportGraph& sg, const GroupElement& g, const GroupElement& g_prime,
    std::size_t max_len) {
  if (max_len < 1) throw std::invalid_argument("oracle max_len must be >= 1");
  const GroupElement start = reduce(sg.group, g);
  const GroupElement goal = reduce(sg.group, g_prime);
  require_member(sg, start, "chain start");
  require_member(sg, goal, "chain target");
  const GroupElement goal_inv = inverse(sg.group, goal);

  // States are partial products, which stay inside the support; the target
  // itself lies in the support because it equals g' or its inverse.
  struct Node {
    GroupElement product;
    std::size_t parent;     // index into nodes, or npos for the root
    GroupElement letter;    // chain element appended to reach this node
    std::size_t length;
  };
  constexpr std::size_t npos = static_cast<std::size_t>(-1);

  auto chain_of = [&](const std::vector<Node>& nodes, std::size_t at) {
    std::vector<GroupElement> chain;
    for (std::size_t i = at; i != npos; i = nodes[i].parent) {
      chain.push_back(nodes[i].letter);
    }
    return std::vector<GroupElement>(chain.rbegin(), chain.rend());
  };

  std::vector<Node> nodes{{start, npos, start, 1}};
  if (start == goal || start == goal_inv) return chain_of(nodes, 0);

  std::set<GroupElement> visited{start};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    if (nodes[at].length >= max_len) continue;
    for (const auto& s : sg.elements) {
      const GroupElement next = multiply(sg.group, nodes[at].product, s);
      if (next == goal || next == goal_inv) {
        nodes.push_back({next, at, s, nodes[at].length + 1});
        return chain_of(nodes, nodes.size() - 1);
      }
      if (!sg.contains(next) || visited.count(next)) continue;
      visited.insert(next);
      nodes.push_back({next, at, s, nodes[at].length + 1});
      queue.push_back(nodes.size() - 1);
    }
  }
  return std::nullopt;
}

std::vector<std::set<GroupElement>> oracle_partition(const SupportGraph& sg,
                                                     std::size_t max_len) {
  require_symmetric(sg);
  std::vector<std::set<GroupElement>> classes;
  std::set<GroupElement> seen;
  for (const auto& g : sg.elements) {
    if (seen.count(g)) continue;
    std::set<GroupElement> members;
    for (const auto& h : sg.elements) {
      if (oracle_connected(sg, g, h, max_len)) members.insert(h);
    }
    seen.insert(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

}  // namespace grlie
