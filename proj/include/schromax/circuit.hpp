#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gate.hpp"
#include "statevec.hpp"

namespace schromax {

struct Block {
  std::string name;
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Ordered gate list; ops[0] acts first. Named blocks are non-overlapping
/// index ranges used for reporting.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(const RegisterLayout& l) : layout_(l) {}

  const RegisterLayout& layout() const { return layout_; }
  const std::vector<GateOp>& ops() const { return ops_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }

  Circuit& add(const GateOp& g) {
    validate_gate(g, layout_.total());
    ops_.push_back(g);
    return *this;
  }
  Circuit& add(const std::vector<GateOp>& gs) {
    for (auto& g : gs) add(g);
    return *this;
  }
  // Appends `gs` as one named block.
  Circuit& add_block(const std::string& name, const std::vector<GateOp>& gs) {
    const std::size_t b = ops_.size();
    add(gs);
    blocks_.push_back({name, b, ops_.size()});
    return *this;
  }
  // Appends another circuit, prefixing its block names.
  Circuit& append(const Circuit& c, const std::string& prefix = "") {
    if (!(c.layout_ == layout_)) throw Error(ErrorCode::InvalidArgument, "layout mismatch");
    const std::size_t off = ops_.size();
    ops_.insert(ops_.end(), c.ops_.begin(), c.ops_.end());
    for (auto b : c.blocks_) {
      b.name = prefix.empty() ? b.name : prefix + "/" + b.name;
      b.begin += off;
      b.end += off;
      blocks_.push_back(b);
    }
    return *this;
  }
  Circuit inverse() const {
    Circuit c(layout_);
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) c.ops_.push_back(adjoint(*it));
    for (auto b : blocks_) {
      const std::size_t n = ops_.size();
      c.blocks_.push_back({b.name, n - b.end, n - b.begin});
    }
    return c;
  }
  void validate() const {
    layout_.validate();
    for (auto& g : ops_) validate_gate(g, layout_.total());
  }

 private:
  RegisterLayout layout_;
  std::vector<GateOp> ops_;
  std::vector<Block> blocks_;
};

inline void run(StateVector& st, const Circuit& c) {
  if (!(st.layout() == c.layout())) throw Error(ErrorCode::InvalidArgument, "layout mismatch");
  apply_gates(st, c.ops());
}

// ---------------------------------------------------------------- counting

struct GateCount {
  long long n_single = 0;
  long long n_cnot_equiv = 0;
  GateCount& operator+=(const GateCount& o) {
    n_single += o.n_single;
    n_cnot_equiv += o.n_cnot_equiv;
    return *this;
  }
  bool operator==(const GateCount&) const = default;
};

struct GateCountReport {
  long long n_single = 0;
  long long n_cnot_equiv = 0;
  std::vector<std::pair<std::string, GateCount>> blocks;  // in first-appearance order

  GateCount total() const { return {n_single, n_cnot_equiv}; }
  GateCount block(const std::string& name) const {
    for (auto& [n, c] : blocks)
      if (n == name) return c;
    return {};
  }
};

/// CNOT-equivalent cost of a rotation with c controls: 0 for c = 0,
/// otherwise max(16(c+1) - 40, 1).
inline long long mc_rotation_cost(long long c) {
  if (c <= 0) return 0;
  return std::max<long long>(16 * (c + 1) - 40, 1);
}

inline GateCount count_op(const GateOp& g) {
  const long long c = static_cast<long long>(g.controls.size());
  switch (g.kind) {
    case GateKind::GlobalPhase: return {1, 0};
    case GateKind::CNOT: return {0, 1};
    case GateKind::X:
      if (c == 0) return {1, 0};
      if (c == 1) return {0, 1};
      return {0, mc_rotation_cost(c)};
    case GateKind::QFT:
    case GateKind::IQFT: {
      const long long q = static_cast<long long>(g.targets.size());
      return {0, q * (q - 1) / 2};
    }
    case GateKind::RZMulti: {
      const long long t = static_cast<long long>(g.targets.size());
      return {1, 2 * (t - 1) + mc_rotation_cost(c)};
    }
    default: return {1, mc_rotation_cost(c)};
  }
}

inline GateCountReport count_gates(const Circuit& circ) {
  GateCountReport r;
  std::vector<int> owner(circ.size(), -1);
  std::map<std::string, std::size_t> idx;
  for (auto& b : circ.blocks()) {
    auto it = idx.find(b.name);
    if (it == idx.end()) {
      it = idx.emplace(b.name, r.blocks.size()).first;
      r.blocks.push_back({b.name, {}});
    }
    for (std::size_t i = b.begin; i < b.end; ++i) owner[i] = static_cast<int>(it->second);
  }
  std::size_t other = r.blocks.size();
  bool has_other = false;
  for (std::size_t i = 0; i < circ.size(); ++i) {
    const GateCount gc = count_op(circ.ops()[i]);
    r.n_single += gc.n_single;
    r.n_cnot_equiv += gc.n_cnot_equiv;
    if (owner[i] >= 0) {
      r.blocks[owner[i]].second += gc;
    } else {
      if (!has_other) {
        r.blocks.push_back({"(unlabelled)", {}});
        has_other = true;
      }
      r.blocks[other].second += gc;
    }
  }
  return r;
}

// ---------------------------------------------------------------- json

inline nlohmann::json to_json(const GateOp& g) {
  nlohmann::json j;
  j["kind"] = gate_name(g.kind);
  j["targets"] = g.targets;
  nlohmann::json cs = nlohmann::json::array();
  for (auto& c : g.controls) cs.push_back({{"qubit", c.qubit}, {"polarity", c.polarity}});
  j["controls"] = cs;
  j["angle"] = g.angle;
  if (g.kind == GateKind::QFT || g.kind == GateKind::IQFT) j["centered"] = g.centered;
  return j;
}

inline GateOp gate_from_json(const nlohmann::json& j) {
  static const std::map<std::string, GateKind> kinds = {
      {"x", GateKind::X},       {"h", GateKind::H},         {"p", GateKind::P},
      {"rx", GateKind::RX},     {"ry", GateKind::RY},       {"rz", GateKind::RZ},
      {"rz_multi", GateKind::RZMulti}, {"cnot", GateKind::CNOT}, {"qft", GateKind::QFT},
      {"iqft", GateKind::IQFT}, {"global_phase", GateKind::GlobalPhase}};
  GateOp g;
  auto it = kinds.find(j.at("kind").get<std::string>());
  if (it == kinds.end()) throw Error(ErrorCode::Parse, "unknown gate kind");
  g.kind = it->second;
  g.targets = j.at("targets").get<std::vector<int>>();
  for (auto& c : j.at("controls")) g.controls.push_back({c.at("qubit"), c.at("polarity")});
  g.angle = j.value("angle", 0.0);
  g.centered = j.value("centered", true);
  return g;
}

inline nlohmann::json to_json(const RegisterLayout& l) {
  return {{"n_sys", l.n_sys}, {"n_s", l.n_s}, {"n_p", l.n_p}};
}

inline nlohmann::json to_json(const Circuit& c) {
  nlohmann::json j;
  j["layout"] = to_json(c.layout());
  j["ops"] = nlohmann::json::array();
  for (auto& g : c.ops()) j["ops"].push_back(to_json(g));
  j["blocks"] = nlohmann::json::array();
  for (auto& b : c.blocks()) j["blocks"].push_back({{"name", b.name}, {"begin", b.begin}, {"end", b.end}});
  return j;
}

inline Circuit circuit_from_json(const nlohmann::json& j) {
  const auto& l = j.at("layout");
  Circuit c(RegisterLayout(l.at("n_sys"), l.at("n_s"), l.at("n_p")));
  const auto& ops = j.at("ops");
  std::vector<GateOp> gs;
  for (auto& o : ops) gs.push_back(gate_from_json(o));
  // rebuild blocks in order; gaps are unlabelled ops
  std::size_t pos = 0;
  for (auto& b : j.at("blocks")) {
    const std::size_t bb = b.at("begin"), be = b.at("end");
    for (; pos < bb; ++pos) c.add(gs[pos]);
    c.add_block(b.at("name"), std::vector<GateOp>(gs.begin() + bb, gs.begin() + be));
    pos = be;
  }
  for (; pos < gs.size(); ++pos) c.add(gs[pos]);
  return c;
}

inline nlohmann::json to_json(const GateCountReport& r) {
  nlohmann::json j;
  j["n_single"] = r.n_single;
  j["n_cnot_equiv"] = r.n_cnot_equiv;
  j["blocks"] = nlohmann::json::array();
  for (auto& [n, c] : r.blocks)
    j["blocks"].push_back({{"name", n}, {"n_single", c.n_single}, {"n_cnot_equiv", c.n_cnot_equiv}});
  return j;
}

}  // namespace schromax
