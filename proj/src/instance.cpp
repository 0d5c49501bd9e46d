#include "planarflow/instance.hpp"

namespace planarflow {

void Instance::validate() const {
  NodeId n = embedding.node_count();
  if (sink < 0 || sink >= n) throw Error("sink node out of range");
  if (static_cast<NodeId>(supplies.size()) != n)
    throw Error("one supply entry per node required");
  if (static_cast<ArcId>(cap_forward.size()) != embedding.arc_space() ||
      static_cast<ArcId>(cap_reverse.size()) != embedding.arc_space())
    throw Error("one capacity pair per arc required");
  for (ArcId a = 0; a < embedding.arc_space(); ++a) {
    if (!embedding.arc_alive(a)) continue;
    if (cap_forward[a] < 0 || cap_reverse[a] < 0)
      throw Error("capacities must be nonnegative");
    if (is_inf(cap_forward[a]) || is_inf(cap_reverse[a]))
      throw Error("input capacities must be finite");
  }
  for (NodeId v = 0; v < n; ++v) {
    if (v == sink) continue;
    if (supplies[v] < 0) throw Error("supplies must be nonnegative");
  }
}

std::vector<DartId> rotation_list(const Embedding& emb, NodeId v) {
  std::vector<DartId> rot;
  emb.for_darts_at(v, [&](DartId d) { rot.push_back(d); });
  return rot;
}

bool Instance::operator==(const Instance& other) const {
  if (embedding.node_count() != other.embedding.node_count()) return false;
  if (embedding.arc_space() != other.embedding.arc_space()) return false;
  if (sink != other.sink) return false;
  for (ArcId a = 0; a < embedding.arc_space(); ++a) {
    if (embedding.arc_alive(a) != other.embedding.arc_alive(a)) return false;
    if (!embedding.arc_alive(a)) continue;
    if (embedding.arc(a).tail != other.embedding.arc(a).tail) return false;
    if (embedding.arc(a).head != other.embedding.arc(a).head) return false;
    if (cap_forward[a] != other.cap_forward[a]) return false;
    if (cap_reverse[a] != other.cap_reverse[a]) return false;
  }
  for (NodeId v = 0; v < embedding.node_count(); ++v) {
    if (v != sink && supplies[v] != other.supplies[v]) return false;
    if (rotation_list(embedding, v) != rotation_list(other.embedding, v))
      return false;
  }
  return true;
}

}  // namespace planarflow
