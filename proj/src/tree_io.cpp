#include "lbp/tree_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

namespace lbp {

namespace {

struct Builder {
  std::vector<std::string> names;
  std::map<std::string, int> ids;
  std::vector<std::pair<int, int>> edges;
  std::map<int, int> declared;  // vertex -> 0 interior, +-1 boundary

  int id(const std::string& name) {
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    int v = static_cast<int>(names.size());
    names.push_back(name);
    ids[name] = v;
    return v;
  }
};

void check_connected_tree(int n, const std::vector<std::pair<int, int>>& edges) {
  if (static_cast<int>(edges.size()) != n - 1)
    throw Error("tree spec must have exactly nodes-1 edges (got " +
                std::to_string(edges.size()) + " edges for " + std::to_string(n) + " nodes)");
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  seen[0] = 1;
  q.push(0);
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
  }
  if (reached != n) throw Error("tree spec graph is disconnected");
  // n-1 edges + connected implies acyclic, but a repeated edge line slips
  // through that count, so reject duplicates explicitly
  auto sorted = edges;
  for (auto& e : sorted)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("duplicate edge in tree spec");
}

}  // namespace

TreeInstance parse_tree_spec(const std::string& text) {
  Builder b;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    auto fail = [&](const std::string& msg) {
      throw Error("tree spec line " + std::to_string(line_no) + ": " + msg);
    };
    if (kind == "edge") {
      std::string u, v;
      if (!(ls >> u >> v)) fail("edge needs two node names");
      if (u == v) fail("self-loop");
      b.edges.push_back({b.id(u), b.id(v)});
    } else if (kind == "interior") {
      std::string u;
      if (!(ls >> u)) fail("interior needs a node name");
      int v = b.id(u);
      if (b.declared.count(v)) fail("node '" + u + "' declared twice");
      b.declared[v] = 0;
    } else if (kind == "boundary") {
      std::string u, val;
      if (!(ls >> u >> val)) fail("boundary needs a node name and +1/-1");
      int sign;
      if (val == "+1" || val == "+") sign = 1;
      else if (val == "-1" || val == "-") sign = -1;
      else {
        fail("boundary value must be +1 or -1, got '" + val + "'");
        sign = 0;
      }
      int v = b.id(u);
      if (b.declared.count(v)) fail("node '" + u + "' declared twice");
      b.declared[v] = sign;
    } else {
      fail("unknown directive '" + kind + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
  }
  int n = static_cast<int>(b.names.size());
  if (n == 0) throw Error("tree spec is empty");
  for (int v = 0; v < n; ++v)
    if (!b.declared.count(v))
      throw Error("node '" + b.names[v] + "' has no interior/boundary declaration");
  check_connected_tree(n, b.edges);

  std::vector<std::int8_t> values(n);
  int interior = 0;
  for (int v = 0; v < n; ++v) {
    values[v] = static_cast<std::int8_t>(b.declared[v]);
    if (values[v] == 0) ++interior;
  }
  if (interior == 0) throw Error("tree spec has no interior node");

  // interior set must induce a connected subtree
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : b.edges)
    if (values[u] == 0 && values[v] == 0) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (values[v] == 0) {
      start = v;
      break;
    }
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  seen[start] = 1;
  q.push(start);
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
  }
  if (reached != interior) throw Error("interior nodes do not form a connected subtree");

  return {b.names, GraphInstance(std::move(values), b.edges)};
}

TreeInstance load_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open tree spec '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_tree_spec(buf.str());
}

}  // namespace lbp
