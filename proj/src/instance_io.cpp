#include "planarflow/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace planarflow {

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    size_t start = raw.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (raw[start] == '#') continue;
    lines.push_back(Line{number, raw});
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

Cap parse_nonneg(const Line& line, const std::string& tok, const char* what) {
  if (tok == "inf") return kInf;
  try {
    size_t pos = 0;
    long long value = std::stoll(tok, &pos);
    if (pos != tok.size()) fail(line, std::string("malformed ") + what);
    if (value < 0)
      fail(line, std::string("negative ") + what + " '" + tok + "'");
    return static_cast<Cap>(value);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, std::string("malformed ") + what + " '" + tok + "'");
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty instance file");

  size_t at = 0;
  std::istringstream header(lines[at].text);
  std::string magic, extra;
  long long v_count = -1, a_count = -1;
  header >> magic >> v_count >> a_count;
  if (magic != "pmf" || header.fail() || v_count < 1 || a_count < 0 ||
      (header >> extra))
    fail(lines[at], "malformed header, expected 'pmf <V> <A>'");
  ++at;

  NodeId n = static_cast<NodeId>(v_count);
  ArcId m = static_cast<ArcId>(a_count);
  std::vector<Cap> supplies(n, 0);
  std::vector<char> node_seen(n, 0);
  NodeId sink = kNoNode;

  auto parse_node_id = [&](const Line& line, const std::string& tok,
                           NodeId bound, const char* what) -> NodeId {
    try {
      size_t pos = 0;
      long long id = std::stoll(tok, &pos);
      if (pos != tok.size() || id < 0 || id >= bound)
        fail(line, std::string("unknown ") + what + " '" + tok + "'");
      return static_cast<NodeId>(id);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      fail(line, std::string("unknown ") + what + " '" + tok + "'");
    }
  };

  for (NodeId i = 0; i < n; ++i, ++at) {
    if (at >= lines.size()) throw ParseError("unexpected end of file in node lines");
    const Line& line = lines[at];
    std::istringstream in(line.text);
    std::string tag, id_tok, supply_tok;
    in >> tag >> id_tok >> supply_tok;
    if (tag != "n" || supply_tok.empty()) fail(line, "expected 'n <id> <supply|inf|->'");
    NodeId id = parse_node_id(line, id_tok, n, "node id");
    if (node_seen[id]) fail(line, "duplicate node " + id_tok);
    node_seen[id] = 1;
    if (supply_tok == "-") {
      if (sink != kNoNode) fail(line, "second sink marker");
      sink = id;
    } else {
      supplies[id] = parse_nonneg(line, supply_tok, "supply");
    }
  }
  if (sink == kNoNode) throw ParseError("no sink marker '-' found");

  std::vector<std::vector<DartId>> rotations(n);
  std::vector<char> rot_seen(n, 0);
  for (NodeId i = 0; i < n; ++i, ++at) {
    if (at >= lines.size()) throw ParseError("unexpected end of file in rotation lines");
    const Line& line = lines[at];
    std::istringstream in(line.text);
    std::string tag, id_tok;
    in >> tag >> id_tok;
    if (tag != "r") fail(line, "expected 'r <id> <darts>'");
    NodeId id = parse_node_id(line, id_tok, n, "node id");
    if (rot_seen[id]) fail(line, "duplicate rotation for node " + id_tok);
    rot_seen[id] = 1;
    long long dart;
    while (in >> dart) {
      if (dart < 0 || dart >= static_cast<long long>(m) * 2)
        fail(line, "dart " + std::to_string(dart) + " out of range");
      rotations[id].push_back(static_cast<DartId>(dart));
    }
    if (!in.eof()) fail(line, "malformed dart list");
  }

  struct ArcLine {
    NodeId tail, head;
    Cap cf, cr;
  };
  std::vector<ArcLine> arc_lines(m);
  std::vector<char> arc_seen(m, 0);
  for (ArcId i = 0; i < m; ++i, ++at) {
    if (at >= lines.size()) throw ParseError("unexpected end of file in arc lines");
    const Line& line = lines[at];
    std::istringstream in(line.text);
    std::string tag, id_tok, tail_tok, head_tok, cf_tok, cr_tok;
    in >> tag >> id_tok >> tail_tok >> head_tok >> cf_tok >> cr_tok;
    if (tag != "a" || cr_tok.empty())
      fail(line, "expected 'a <id> <tail> <head> <cap_forward> <cap_reverse>'");
    long long id = -1;
    try {
      id = std::stoll(id_tok);
    } catch (const std::exception&) {
      fail(line, "malformed arc id");
    }
    if (id < 0 || id >= m) fail(line, "arc id out of range");
    if (arc_seen[id]) fail(line, "duplicate arc " + id_tok);
    arc_seen[id] = 1;
    ArcLine& al = arc_lines[id];
    al.tail = parse_node_id(line, tail_tok, n, "node reference");
    al.head = parse_node_id(line, head_tok, n, "node reference");
    Cap cf = parse_nonneg(line, cf_tok, "capacity");
    Cap cr = parse_nonneg(line, cr_tok, "capacity");
    if (is_inf(cf) || is_inf(cr)) fail(line, "input capacities must be finite");
    al.cf = cf;
    al.cr = cr;
  }
  if (at != lines.size()) fail(lines[at], "trailing content");

  Instance inst;
  try {
    inst.embedding = Embedding::build(n, m, rotations);
  } catch (const EmbeddingError& e) {
    throw ParseError(std::string("invalid embedding: ") + e.what());
  }
  for (ArcId a = 0; a < m; ++a) {
    if (inst.embedding.arc(a).tail != arc_lines[a].tail ||
        inst.embedding.arc(a).head != arc_lines[a].head)
      throw ParseError("arc " + std::to_string(a) +
                       " endpoints disagree with the rotation system");
    inst.cap_forward.push_back(arc_lines[a].cf);
    inst.cap_reverse.push_back(arc_lines[a].cr);
  }
  inst.supplies = std::move(supplies);
  inst.sink = sink;
  inst.validate();
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  NodeId n = inst.node_count();
  out << "pmf " << n << ' ' << inst.arc_count() << '\n';
  for (NodeId v = 0; v < n; ++v) {
    out << "n " << v << ' ';
    if (v == inst.sink)
      out << '-';
    else if (is_inf(inst.supplies[v]))
      out << "inf";
    else
      out << inst.supplies[v];
    out << '\n';
  }
  for (NodeId v = 0; v < n; ++v) {
    out << "r " << v;
    for (DartId d : rotation_list(inst.embedding, v)) out << ' ' << d;
    out << '\n';
  }
  for (ArcId a = 0; a < inst.arc_count(); ++a) {
    const Arc& arc = inst.embedding.arc(a);
    out << "a " << a << ' ' << arc.tail << ' ' << arc.head << ' '
        << inst.cap_forward[a] << ' ' << inst.cap_reverse[a] << '\n';
  }
  return out.str();
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

std::string serialize_flow(const Instance& inst, const FlowState& state) {
  std::ostringstream out;
  out << "v " << state.value() << '\n';
  for (ArcId a = 0; a < inst.arc_count(); ++a)
    out << "f " << a << ' ' << state.flow(forward_dart(a)) << '\n';
  return out.str();
}

FlowCheckResult check_flow(const Instance& inst, const std::string& flow_text) {
  std::vector<Line> lines = content_lines(flow_text);
  if (lines.empty()) return {false, "empty flow file"};

  Cap declared = 0;
  std::vector<Cap> flow(inst.arc_count(), 0);
  std::vector<char> seen(inst.arc_count(), 0);
  bool have_value = false;
  for (const Line& line : lines) {
    std::istringstream in(line.text);
    std::string tag;
    in >> tag;
    if (tag == "v") {
      long long v;
      if (!(in >> v)) return {false, "line " + std::to_string(line.number) + ": malformed value"};
      declared = v;
      have_value = true;
    } else if (tag == "f") {
      long long a, f;
      if (!(in >> a >> f))
        return {false, "line " + std::to_string(line.number) + ": malformed flow line"};
      if (a < 0 || a >= inst.arc_count() || !inst.embedding.arc_alive(static_cast<ArcId>(a)))
        return {false, "line " + std::to_string(line.number) + ": unknown arc " + std::to_string(a)};
      if (seen[a]) return {false, "line " + std::to_string(line.number) + ": duplicate arc " + std::to_string(a)};
      seen[a] = 1;
      flow[a] = f;
    } else {
      return {false, "line " + std::to_string(line.number) + ": unknown tag '" + tag + "'"};
    }
  }
  if (!have_value) return {false, "missing value line"};

  // Capacity respect on both darts (antisymmetry is implicit in the format).
  for (ArcId a = 0; a < inst.arc_count(); ++a) {
    if (flow[a] > inst.cap_forward[a])
      return {false, "capacity violated on dart " + std::to_string(forward_dart(a)) +
                         " (arc " + std::to_string(a) + ")"};
    if (-flow[a] > inst.cap_reverse[a])
      return {false, "capacity violated on dart " + std::to_string(reverse_dart(a)) +
                         " (arc " + std::to_string(a) + ")"};
  }

  std::vector<Cap> outflow(inst.node_count(), 0);
  for (ArcId a = 0; a < inst.arc_count(); ++a) {
    outflow[inst.embedding.arc(a).tail] += flow[a];
    outflow[inst.embedding.arc(a).head] -= flow[a];
  }
  for (NodeId v = 0; v < inst.node_count(); ++v) {
    if (v == inst.sink) continue;
    if (!is_inf(inst.supplies[v]) && outflow[v] > inst.supplies[v])
      return {false, "supply violated at node " + std::to_string(v)};
    if (outflow[v] < 0)
      return {false, "conservation violated at node " + std::to_string(v)};
  }
  Cap value = -outflow[inst.sink];
  if (value != declared)
    return {false, "declared value " + std::to_string(declared) +
                       " but flow delivers " + std::to_string(value)};
  return {true, "ok"};
}

}  // namespace planarflow
