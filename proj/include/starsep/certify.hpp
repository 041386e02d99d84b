#pragma once

#include <optional>
#include <vector>

#include "starsep/separator_engine.hpp"

namespace starsep {

/// One separator-oracle call made while building the decomposition.
struct OracleCall {
  int atom_size = 0;
  int separator_size = 0;
  int bag_separator_size = 0;
  std::string branch;  // "aux_graph" or "wheel_free"
  int back_degree = 0;
  int omega = 0;
  bool ledger_holds = true;
};

struct CertifyReport {
  int t = 4;
  ObstructionReport membership;
  TreeDecomposition td;
  AtomDecomposition atoms;
  TdCheck validity;
  int width = -1;
  int max_separator = 0;
  std::vector<OracleCall> calls;
  int max_back_degree = 0;
  int omega = 0;
  /// 2 * largest lifted separator: the width the separator recursion aims for.
  long long composed_bound = 0;
  /// (4t + 2b) * max(R(t,4) + 1, 6ω + b) with the measured b and ω.
  long long theorem_bound = 0;
  std::optional<int> exact_tw;

  bool width_within_composed() const { return width <= composed_bound; }
  bool width_at_least_exact() const { return !exact_tw || width >= *exact_tw; }
};

/**
 * Tree decomposition of a class member: atoms along clique cutsets, each
 * decomposed with the lifted central-bag separator as oracle, glued along
 * the cutsets.
 */
inline CertifyReport certify(const Graph& g, int t, ClassVariant variant = ClassVariant::standard,
                             int exact_cap = default_exact_cap) {
  CertifyReport report;
  report.t = t;
  report.membership = class_membership(g, t, variant);
  if (!report.membership.member) throw PreconditionError("graph is not in the class");
  SeparatorOracle oracle = [&](const Graph& atom, const WeightFn& w) {
    MainSeparatorResult r = main_separator(atom, w, t);
    OracleCall call;
    call.atom_size = atom.order();
    call.separator_size = r.certificate.separator.size();
    call.bag_separator_size = r.bag_certificate.separator.size();
    call.branch = r.bag_certificate.source;
    call.back_degree = r.division.partition.back_degree;
    call.omega = clique_number(r.division.bag.graph);
    call.ledger_holds = r.certificate.ledger_holds() && r.bag_certificate.ledger_holds();
    report.calls.push_back(call);
    return r.certificate.separator;
  };
  BuildResult built = build_td(g, oracle);
  report.td = std::move(built.td);
  report.atoms = std::move(built.atoms);
  report.max_separator = built.stats.max_separator;
  report.validity = validate_td(g, report.td);
  report.width = report.td.width();
  for (const auto& c : report.calls) {
    report.max_back_degree = std::max(report.max_back_degree, c.back_degree);
    report.omega = std::max(report.omega, c.omega);
  }
  const long long b = report.max_back_degree;
  report.composed_bound = 2LL * report.max_separator;
  report.theorem_bound = (4LL * t + 2 * b) * std::max<long long>(ramsey_t4(t) + 1, 6LL * report.omega + b);
  if (g.order() <= exact_cap) report.exact_tw = exact_treewidth(g, exact_cap);
  return report;
}

}  // namespace starsep
