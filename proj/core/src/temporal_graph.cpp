#include "cineparse/temporal_graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace cineparse {

ClusterSpan cluster_span(const Cluster& cluster, const VideoDocument& doc) {
  if (cluster.shots.empty()) fail(Errc::bad_input, "cluster has no shots");
  const Shot& first = doc.shots[cluster.shots.front()];
  const Shot& last = doc.shots[cluster.shots.back()];
  return {first.t, last.end()};
}

const char* to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::meets: return "Meets";
    case RelationKind::before: return "Before";
    case RelationKind::during: return "During";
    case RelationKind::overlaps: return "Overlaps";
  }
  return "Meets";
}

RelationKind relation_kind_from_string(const std::string& name) {
  if (name == "Meets") return RelationKind::meets;
  if (name == "Before") return RelationKind::before;
  if (name == "During") return RelationKind::during;
  if (name == "Overlaps") return RelationKind::overlaps;
  fail(Errc::bad_input, "unknown relation kind: " + name);
}

std::optional<AllenRelation> derive_relation(const Cluster& left, const Cluster& right,
                                             const VideoDocument& doc) {
  if (left.id == right.id) fail(Errc::bad_input, "cannot relate a cluster to itself");
  const ClusterSpan ls = cluster_span(left, doc);
  const ClusterSpan rs = cluster_span(right, doc);
  if (rs.start < ls.start) fail(Errc::bad_input, "clusters passed in reverse span order");

  if (rs.start >= ls.end) {
    // Disjoint hulls relate only when they touch across a boundary.
    if (rs.start == ls.end && left.sequence == right.sequence)
      return AllenRelation{RelationKind::meets, {}};
    if (left.sequence != right.sequence) {
      const Shot& last = doc.shots[left.shots.back()];
      if (last.transition && last.transition->kind != TransitionKind::cut &&
          rs.start == ls.end + last.transition->tau)
        return AllenRelation{RelationKind::before, {last.transition->tau}};
    }
    return std::nullopt;
  }

  if (rs.end <= ls.end) {
    AllenRelation rel{RelationKind::during, {}};
    for (int shot : right.shots) rel.params.push_back(doc.shots[shot].t);
    return rel;
  }

  AllenRelation rel{RelationKind::overlaps, {}};
  for (int shot : right.shots) {
    if (doc.shots[shot].t < ls.end) rel.params.push_back(doc.shots[shot].t);
  }
  for (int shot : right.shots) {
    if (doc.shots[shot].t >= ls.end) {
      rel.params.push_back(doc.shots[shot].t);
      break;
    }
  }
  return rel;
}

TemporalClustersGraph build_tcg(const TimeSpaceGraph& tsg, const VideoDocument& doc) {
  TemporalClustersGraph tcg;
  tcg.clusters = tsg.clusters;

  // Cluster ids already follow seed order, which is span-start order.
  std::vector<int> order(tcg.clusters.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const ClusterSpan sa = cluster_span(tcg.clusters[a], doc);
    const ClusterSpan sb = cluster_span(tcg.clusters[b], doc);
    if (sa.start != sb.start) return sa.start < sb.start;
    if (sa.end != sb.end) return sa.end < sb.end;
    return a < b;
  });

  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Cluster& left = tcg.clusters[order[i]];
      const Cluster& right = tcg.clusters[order[j]];
      if (auto rel = derive_relation(left, right, doc))
        tcg.edges.push_back({left.id, right.id, std::move(*rel)});
    }
  }
  std::sort(tcg.edges.begin(), tcg.edges.end(), [](const TcgEdge& a, const TcgEdge& b) {
    if (a.left != b.left) return a.left < b.left;
    return a.right < b.right;
  });
  return tcg;
}

TemporalDag to_dag(const TemporalClustersGraph& tcg, const VideoDocument& doc) {
  const int n = static_cast<int>(tcg.clusters.size());
  std::vector<int> incoming(n, 0), outgoing(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (const TcgEdge& e : tcg.edges) {
    if (e.left < 0 || e.left >= n || e.right < 0 || e.right >= n)
      fail(Errc::bad_input, "edge references a cluster outside the graph");
    ++incoming[e.right];
    ++outgoing[e.left];
    succ[e.left].push_back(e.right);
  }

  // Kahn's algorithm; leftovers mean the edge set loops back in time.
  std::deque<int> ready;
  std::vector<int> pending(incoming);
  for (int i = 0; i < n; ++i)
    if (pending[i] == 0) ready.push_back(i);
  int processed = 0;
  while (!ready.empty()) {
    const int node = ready.front();
    ready.pop_front();
    ++processed;
    for (int next : succ[node])
      if (--pending[next] == 0) ready.push_back(next);
  }
  if (processed != n) fail(Errc::cycle_detected, "temporal clusters graph contains a cycle");

  TemporalDag dag;
  dag.cluster_count = n;
  dag.edges = tcg.edges;
  const Frame doc_start = doc.shots.front().t;
  const Frame doc_end = doc.shots.back().end();
  for (int i = 0; i < n; ++i) {
    const ClusterSpan span = cluster_span(tcg.clusters[i], doc);
    if (incoming[i] == 0) dag.begin_edges.emplace_back(i, span.start - doc_start);
    if (outgoing[i] == 0) dag.end_edges.emplace_back(i, doc_end - span.end);
  }
  return dag;
}

namespace {

std::string edge_label(const AllenRelation& rel) {
  std::ostringstream out;
  out << to_string(rel.kind);
  if (!rel.params.empty()) {
    out << "(";
    for (std::size_t i = 0; i < rel.params.size(); ++i) {
      if (i) out << ", ";
      out << rel.params[i];
    }
    out << ")";
  }
  return out.str();
}

void write_cluster_edges(std::ostringstream& out, const std::vector<TcgEdge>& edges) {
  for (const TcgEdge& e : edges)
    out << "  c" << e.left << " -> c" << e.right << " [label=\"" << edge_label(e.relation)
        << "\"];\n";
}

}  // namespace

std::string export_dot(const TemporalClustersGraph& tcg) {
  std::ostringstream out;
  out << "digraph tcg {\n  rankdir=LR;\n";
  for (const Cluster& cluster : tcg.clusters)
    out << "  c" << cluster.id << " [label=\"C" << cluster.id << "\"];\n";
  write_cluster_edges(out, tcg.edges);
  out << "}\n";
  return out.str();
}

std::string export_dot(const TemporalDag& dag) {
  std::ostringstream out;
  out << "digraph tcg_dag {\n  rankdir=LR;\n  begin [label=\"Begin\" shape=diamond];\n";
  for (int i = 0; i < dag.cluster_count; ++i) out << "  c" << i << " [label=\"C" << i << "\"];\n";
  out << "  end [label=\"End\" shape=diamond];\n";
  for (const auto& [node, delay] : dag.begin_edges)
    out << "  begin -> c" << node << " [label=\"" << delay << "\"];\n";
  write_cluster_edges(out, dag.edges);
  for (const auto& [node, delay] : dag.end_edges)
    out << "  c" << node << " -> end [label=\"" << delay << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace cineparse
