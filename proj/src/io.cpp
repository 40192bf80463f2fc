#include "glpart/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "glpart/error.hpp"

namespace glpart {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

/// Non-empty lines with comments stripped, split on blanks.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) {
        ++i;
      }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') {
        ++j;
      }
      if (j > i) {
        line.tokens.push_back(raw.substr(i, j - i));
      }
      i = j;
    }
    if (!line.tokens.empty()) {
      out.push_back(std::move(line));
    }
    if (end == text.size()) {
      break;
    }
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void syntax(int line, const std::string& what) {
  throw Error("syntax-error", "syntax error at line " + std::to_string(line) + ": " + what);
}

[[noreturn]] void violated(const std::string& what) {
  throw Error("invalid-input", "invariant violated: " + what);
}

[[noreturn]] void violated(int line, const std::string& what) {
  violated(what + " (line " + std::to_string(line) + ")");
}

template <class T>
T number(const Line& l, std::size_t idx) {
  if (idx >= l.tokens.size()) {
    syntax(l.number, "missing field");
  }
  const std::string_view tok = l.tokens[idx];
  T value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    syntax(l.number, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

void expect(const Line& l, std::string_view tag, std::size_t fields) {
  if (l.tokens.front() != tag) {
    syntax(l.number, "expected '" + std::string(tag) + "', got '" + std::string(l.tokens.front()) + "'");
  }
  if (fields != 0 && l.tokens.size() != fields) {
    syntax(l.number, "expected " + std::to_string(fields - 1) + " fields after '" + std::string(tag) + "'");
  }
}

/// 1-based id in [1, n] to 0-based.
int id_in_range(const Line& l, std::size_t idx, int n, const char* what) {
  const int x = number<int>(l, idx);
  if (x < 1 || x > n) {
    violated(l.number, std::string(what) + " " + std::to_string(x) + " out of range 1.." + std::to_string(n));
  }
  return x - 1;
}

class Cursor {
public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}
  bool done() const { return next_ >= lines_.size(); }
  const Line& take(const char* wanted) {
    if (done()) {
      const int last = lines_.empty() ? 0 : lines_.back().number;
      syntax(last + 1, std::string("unexpected end of input, expected ") + wanted);
    }
    return lines_[next_++];
  }
  const Line& peek() const { return lines_[next_]; }

private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

int count_field(const Line& l, std::size_t idx, const char* what) {
  const int x = number<int>(l, idx);
  if (x < 0) {
    violated(l.number, std::string(what) + " must be non-negative");
  }
  return x;
}

std::vector<std::pair<int, int>> read_ab_edges(Cursor& cur, int na, int nb, int m) {
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (int x = 0; x < m; ++x) {
    const Line& l = cur.take("an edge line");
    expect(l, "e", 3);
    const int a = id_in_range(l, 1, na, "A-vertex");
    const int b = id_in_range(l, 2, nb, "B-vertex");
    if (!seen.insert({a, b}).second) {
      violated(l.number, "duplicate edge");
    }
    edges.emplace_back(a, b);
  }
  return edges;
}

void append_ids(std::string& out, const VertexSet& s) {
  for (VertexId v : s.members()) {
    out += ' ';
    out += std::to_string(v + 1);
  }
}

std::vector<VertexSet> read_labelled_sets(const std::vector<Line>& lines, std::size_t first, int k, int n,
                                          std::string_view tag) {
  std::vector<VertexSet> sets(static_cast<std::size_t>(k), VertexSet(n));
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  if (lines.size() - first != static_cast<std::size_t>(k)) {
    const int at = lines.size() > first + static_cast<std::size_t>(k)
                       ? lines[first + static_cast<std::size_t>(k)].number
                       : (lines.empty() ? 1 : lines.back().number + 1);
    syntax(at, "expected exactly " + std::to_string(k) + " '" + std::string(tag) + "' lines");
  }
  for (std::size_t x = first; x < lines.size(); ++x) {
    const Line& l = lines[x];
    expect(l, tag, 0);
    const int i = id_in_range(l, 1, k, "set index");
    if (seen[static_cast<std::size_t>(i)] != 0) {
      violated(l.number, "set " + std::to_string(i + 1) + " listed twice");
    }
    seen[static_cast<std::size_t>(i)] = 1;
    for (std::size_t f = 2; f < l.tokens.size(); ++f) {
      const int v = id_in_range(l, f, n, "vertex");
      if (!sets[static_cast<std::size_t>(i)].insert(v)) {
        violated(l.number, "vertex " + std::to_string(v + 1) + " repeated in set " + std::to_string(i + 1));
      }
    }
  }
  return sets;
}

} // namespace

GlInstance InstanceBundle::gl_instance() const {
  if (!has_extension()) {
    throw Error("missing-extension", "instance file has no 'k' section");
  }
  return GlInstance{graph, terminals, demands};
}

InstanceBundle bundle_from_graph(Graph g) {
  InstanceBundle b;
  b.kind = InstanceKind::Graph;
  b.graph = std::move(g);
  return b;
}

InstanceBundle bundle_from_interval(IntervalModel m) {
  InstanceBundle b;
  b.kind = InstanceKind::Interval;
  b.graph = m.graph();
  b.interval = std::move(m);
  return b;
}

InstanceBundle bundle_from_convex(const ConvexModel& m, bool biconvex) {
  InstanceBundle b;
  b.kind = biconvex ? InstanceKind::Biconvex : InstanceKind::Convex;
  BiconvexModel bm;
  static_cast<ConvexModel&>(bm) = m;
  b.graph = bm.graph();
  b.convex = std::move(bm);
  return b;
}

InstanceBundle parse_instance(std::string_view text) {
  Cursor cur(tokenize(text));
  const Line& head = cur.take("a 'p' header");
  if (head.tokens.front() != "p" || head.tokens.size() < 2) {
    syntax(head.number, "expected a 'p' header");
  }
  const std::string_view kind = head.tokens[1];
  InstanceBundle b;
  if (kind == "gl") {
    expect(head, "p", 4);
    const int n = count_field(head, 2, "vertex count");
    const int m = count_field(head, 3, "edge count");
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    for (int x = 0; x < m; ++x) {
      const Line& l = cur.take("an edge line");
      expect(l, "e", 3);
      const int u = id_in_range(l, 1, n, "vertex");
      const int v = id_in_range(l, 2, n, "vertex");
      if (u == v) {
        violated(l.number, "self-loop");
      }
      if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
        violated(l.number, "duplicate edge");
      }
      edges.push_back({u, v});
    }
    b = bundle_from_graph(Graph(n, edges));
  } else if (kind == "interval") {
    expect(head, "p", 3);
    const int n = count_field(head, 2, "vertex count");
    IntervalModel m;
    m.intervals.resize(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) {
      const Line& l = cur.take("an interval line");
      expect(l, "i", 4);
      const int id = id_in_range(l, 1, n, "interval id");
      if (seen[static_cast<std::size_t>(id)] != 0) {
        violated(l.number, "interval " + std::to_string(id + 1) + " listed twice");
      }
      seen[static_cast<std::size_t>(id)] = 1;
      const auto left = number<long long>(l, 2);
      const auto right = number<long long>(l, 3);
      if (left > right) {
        violated(l.number, "interval with left > right");
      }
      m.intervals[static_cast<std::size_t>(id)] = {left, right};
    }
    b = bundle_from_interval(std::move(m));
  } else if (kind == "convex" || kind == "biconvex") {
    expect(head, "p", 5);
    const int na = count_field(head, 2, "A-side size");
    const int nb = count_field(head, 3, "B-side size");
    const int m = count_field(head, 4, "edge count");
    const auto edges = read_ab_edges(cur, na, nb, m);
    try {
      if (kind == "biconvex") {
        b = bundle_from_convex(BiconvexModel::from_edges(na, nb, edges), true);
      } else {
        b = bundle_from_convex(ConvexModel::from_edges(na, nb, edges), false);
      }
    } catch (const Error& e) {
      violated(e.what());
    }
  } else {
    syntax(head.number, "unknown instance kind '" + std::string(kind) + "'");
  }

  if (!cur.done()) {
    const Line& kl = cur.take("'k'");
    expect(kl, "k", 2);
    const int k = number<int>(kl, 1);
    if (k < 1) {
      violated(kl.number, "k must be at least 1");
    }
    for (int x = 0; x < k; ++x) {
      const Line& l = cur.take("a terminal line");
      expect(l, "t", 3);
      b.terminals.push_back(id_in_range(l, 1, b.graph.num_vertices(), "terminal"));
      const int d = number<int>(l, 2);
      if (d < 1) {
        violated(l.number, "demand must be at least 1");
      }
      b.demands.push_back(d);
    }
    if (std::string why = check_gl_instance(b.gl_instance()); !why.empty()) {
      violated(why);
    }
  }
  if (!cur.done()) {
    syntax(cur.peek().number, "unexpected trailing line");
  }
  return b;
}

std::string write_instance(const InstanceBundle& b) {
  std::string out;
  for (const std::string& h : b.header) {
    out += "# " + h + "\n";
  }
  switch (b.kind) {
    case InstanceKind::Graph: {
      const auto edges = b.graph.edges();
      out += "p gl " + std::to_string(b.graph.num_vertices()) + " " + std::to_string(edges.size()) + "\n";
      for (const Edge& e : edges) {
        out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
      }
      break;
    }
    case InstanceKind::Interval: {
      const IntervalModel& m = *b.interval;
      out += "p interval " + std::to_string(m.size()) + "\n";
      for (int v = 0; v < m.size(); ++v) {
        const Interval& iv = m.intervals[static_cast<std::size_t>(v)];
        out += "i " + std::to_string(v + 1) + " " + std::to_string(iv.left) + " " + std::to_string(iv.right) + "\n";
      }
      break;
    }
    case InstanceKind::Convex:
    case InstanceKind::Biconvex: {
      const ConvexModel& m = *b.convex;
      out += std::string("p ") + (b.kind == InstanceKind::Biconvex ? "biconvex " : "convex ") +
             std::to_string(m.na) + " " + std::to_string(m.nb) + " " + std::to_string(m.num_edges()) + "\n";
      for (int i = 0; i < m.na; ++i) {
        for (int j = 0; j < m.nb; ++j) {
          if (m.b_ranges[static_cast<std::size_t>(j)].contains(i)) {
            out += "e " + std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
          }
        }
      }
      break;
    }
  }
  if (b.has_extension()) {
    out += "k " + std::to_string(b.terminals.size()) + "\n";
    for (std::size_t i = 0; i < b.terminals.size(); ++i) {
      out += "t " + std::to_string(b.terminals[i] + 1) + " " + std::to_string(b.demands[i]) + "\n";
    }
  }
  return out;
}

std::vector<VertexSet> parse_cds(std::string_view text, int n) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) {
    syntax(1, "expected a 'c' header");
  }
  expect(lines.front(), "c", 2);
  const int k = number<int>(lines.front(), 1);
  if (k < 1) {
    violated(lines.front().number, "k must be at least 1");
  }
  return read_labelled_sets(lines, 1, k, n, "s");
}

std::string write_cds(const std::vector<VertexSet>& sets) {
  std::string out = "c " + std::to_string(sets.size()) + "\n";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out += "s " + std::to_string(i + 1);
    append_ids(out, sets[i]);
    out += "\n";
  }
  return out;
}

std::vector<VertexSet> parse_partition(std::string_view text, int n) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) {
    syntax(1, "empty partition");
  }
  return read_labelled_sets(lines, 0, static_cast<int>(lines.size()), n, "v");
}

std::string write_partition(const std::vector<VertexSet>& blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out += "v " + std::to_string(i + 1);
    append_ids(out, blocks[i]);
    out += "\n";
  }
  return out;
}

std::string write_report(const VerificationReport& r) { return r.to_text(); }

std::string format_trace(const TraceEvent& ev) {
  switch (ev.kind) {
    case TraceEvent::Kind::Place:
      return "PLACE " + std::to_string(ev.vertex + 1) + " " + std::to_string(ev.set + 1);
    case TraceEvent::Kind::Steal:
      return "STEAL " + std::to_string(ev.vertex + 1) + " " + std::to_string(ev.from_set + 1) + " " +
             std::to_string(ev.set + 1);
    case TraceEvent::Kind::Emit:
      return "EMIT " + std::to_string(ev.set + 1) + " " + std::to_string(ev.tree + 1);
  }
  return {};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("io-error", "cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("io-error", "cannot write " + path);
  }
  out << content;
  if (!out) {
    throw Error("io-error", "write failed for " + path);
  }
}

} // namespace glpart
