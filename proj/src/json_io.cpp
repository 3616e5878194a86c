#include "cosetmg/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cosetmg/errors.hpp"

namespace cosetmg {

using json = nlohmann::ordered_json;

namespace {

json group_json(const PermGroup& G, const std::string& name) {
  json j;
  j["degree"] = G.degree();
  j["generators"] = json::array();
  for (const Perm& g : G.generators()) j["generators"].push_back(g.images());
  j["name"] = name;
  return j;
}

PermGroup group_from(const json& j, std::string* name_out) {
  if (!j.contains("degree")) throw PreconditionError("group json lacks degree");
  int degree = j["degree"].get<int>();
  std::vector<Perm> gens;
  for (const auto& g : j.value("generators", json::array()))
    gens.push_back(Perm(g.get<std::vector<int>>()));
  if (name_out) *name_out = j.value("name", std::string{});
  return PermGroup::generated(degree, std::move(gens));
}

json groupoid_json(const MeetGroupoid& M) {
  json j;
  const int m = M.size();
  j["size"] = m;
  j["inverse"] = M.inverse_table();
  json meet = json::array();
  for (int a = 0; a < m; ++a) {
    json row = json::array();
    for (int b = 0; b < m; ++b) row.push_back(M.meet(a, b));
    meet.push_back(std::move(row));
  }
  j["meet"] = std::move(meet);
  json product = json::array();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (M.defined(a, b)) product.push_back(json::array({a, b, M.product(a, b)}));
  j["product"] = std::move(product);
  if (!M.labels().empty()) j["labels"] = M.labels();
  return j;
}

}  // namespace

std::string group_to_json(const PermGroup& G, const std::string& name) {
  return group_json(G, name).dump(2);
}

PermGroup group_from_json(const std::string& text, std::string* name_out) {
  return group_from(json::parse(text), name_out);
}

std::string groupoid_to_json(const MeetGroupoid& M) { return groupoid_json(M).dump(2); }

std::string groupoid_to_json(const CosetGroupoid& W) {
  json j = groupoid_json(W.groupoid);
  json prov;
  prov["group"] = group_json(W.group(), "");
  prov["basis"] = json::array();
  for (const auto& U : W.family.members) {
    json member = json::array();
    for (int x : U) member.push_back(W.group().element(x).images());
    prov["basis"].push_back(std::move(member));
  }
  j["provenance"] = std::move(prov);
  return j.dump(2);
}

MeetGroupoid groupoid_from_json(const std::string& text) {
  json j = json::parse(text);
  GroupoidTables t;
  t.size = j.at("size").get<int>();
  t.inverse = j.at("inverse").get<std::vector<int>>();
  t.meet.reserve(static_cast<std::size_t>(t.size) * t.size);
  for (const auto& row : j.at("meet"))
    for (const auto& v : row) t.meet.push_back(v.get<int>());
  t.product.assign(static_cast<std::size_t>(t.size) * t.size, MeetGroupoid::kUndefined);
  for (const auto& triple : j.at("product")) {
    int a = triple.at(0).get<int>();
    int b = triple.at(1).get<int>();
    int c = triple.at(2).get<int>();
    if (a < 0 || a >= t.size || b < 0 || b >= t.size)
      throw PreconditionError("product triple out of range");
    t.product[static_cast<std::size_t>(a) * t.size + b] = c;
  }
  if (j.contains("labels")) t.labels = j["labels"].get<std::vector<std::string>>();
  return MeetGroupoid(std::move(t));
}

std::string tower_to_json(const InverseSystem& sys) {
  json j;
  j["levels"] = json::array();
  for (std::size_t d = 0; d < sys.levels.size(); ++d)
    j["levels"].push_back(group_json(sys.levels[d], "level" + std::to_string(d)));
  j["maps"] = sys.maps;
  return j.dump(2);
}

InverseSystem tower_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<PermGroup> levels;
  for (const auto& l : j.at("levels")) levels.push_back(group_from(l, nullptr));
  auto maps = j.at("maps").get<std::vector<std::vector<int>>>();
  return make_tower(std::move(levels), std::move(maps));
}

std::string filter_to_json(const FullFilter& R) {
  json j;
  j["choices"] = json::object();
  for (auto [u, a] : R.choices) j["choices"][std::to_string(u)] = a;
  return j.dump(2);
}

std::string report_to_json(const Report& rep) {
  json j;
  j["command"] = rep.command;
  for (const auto& [k, v] : rep.meta) j["meta"][k] = v;
  j["checks"] = json::array();
  for (const Check& c : rep.checks) {
    json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    if (!c.witness.empty()) cj["witness"] = c.witness;
    if (!c.cardinalities.empty()) {
      for (const auto& [k, v] : c.cardinalities) cj["cardinalities"][k] = v;
    }
    j["checks"].push_back(std::move(cj));
  }
  j["passed"] = rep.passed();
  return j.dump(2);
}

std::string idempotent_order_dot(const MeetGroupoid& M) {
  auto idem = M.idempotents();
  std::ostringstream out;
  out << "digraph idempotents {\n  rankdir=BT;\n";
  for (int u : idem) out << "  n" << u << " [label=\"" << M.label(u) << "\"];\n";
  for (int u : idem)
    for (int v : idem) {
      if (u == v || !M.leq(u, v)) continue;
      bool covering = true;
      for (int w : idem)
        if (w != u && w != v && M.leq(u, w) && M.leq(w, v)) {
          covering = false;
          break;
        }
      if (covering) out << "  n" << u << " -> n" << v << ";\n";
    }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << contents;
}

}  // namespace cosetmg
