#include "dbr/io.hpp"

#include <algorithm>
#include <sstream>

namespace dbr {

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "json") return OutputFormat::Jsonf;
  if (name == "csv") return OutputFormat::Csv;
  throw Error("unknown output format '" + name + "'");
}

Json rational_json(const Rational& r) {
  return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Json group_json(const FiniteGroup& g) {
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  Json table = Json::array();
  for (int a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

Json subgroups_json(const GroupPtr& g, bool classes_only) {
  const auto& lat = g->lattice();
  Json j;
  j["group"] = g->name();
  j["count"] = lat.size();
  j["classes"] = lat.num_classes();
  Json list = Json::array();
  auto entry = [&](int i) {
    Json e;
    e["index"] = i;
    e["order"] = lat.order(i);
    e["elements"] = lat.elements(i);
    e["class"] = lat.class_of(i);
    e["normal"] = lat.is_normal(i);
    return e;
  };
  if (classes_only) {
    for (int c = 0; c < lat.num_classes(); ++c) {
      Json e = entry(lat.class_rep(c));
      e["class_size"] = lat.class_members(c).size();
      auto& reg = TypeRegistry::instance();
      e["type"] = reg.name(reg.classify_subgroup(*g, lat.class_rep(c)));
      list.push_back(std::move(e));
    }
  } else {
    for (int i = 0; i < lat.size(); ++i) list.push_back(entry(i));
  }
  j["subgroups"] = std::move(list);
  return j;
}

std::string class_label(const PairContext& ctx, int cls) {
  int rep = ctx.class_rep(cls);
  const auto& q = ctx.goursat(rep);
  const auto& llat = ctx.left_group()->lattice();
  const auto& rlat = ctx.right_group()->lattice();
  std::ostringstream os;
  if (ctx.lattice().order(rep) == 1) return "1";
  if (ctx.left_free(rep)) {
    os << (ctx.bifree(rep) ? "D" : "L") << llat.order(q.p1) << "x"
       << rlat.order(q.p2) << "#" << cls;
  } else {
    os << "S" << ctx.lattice().order(rep) << "#" << cls;
  }
  return os.str();
}

Json pair_json(const PairContext& ctx) {
  return Json{{"left", ctx.left_group()->name()},
              {"right", ctx.right_group()->name()}};
}

namespace {

const char* flavor_name(SystemFlavor f) {
  switch (f) {
    case SystemFlavor::All:
      return "all";
    case SystemFlavor::LeftFree:
      return "leftfree";
    case SystemFlavor::Bifree:
      return "bifree";
    default:
      return "custom";
  }
}

}  // namespace

Json basis_json(const SubgroupSystem& system) {
  const PairContext& ctx = *system.ctx();
  Json j;
  j["pair"] = pair_json(ctx);
  j["system"] = flavor_name(system.flavor());
  Json list = Json::array();
  int index = 0;
  for (int c : system.classes()) {
    int rep = ctx.class_rep(c);
    Json e;
    e["index"] = index++;
    e["class"] = c;
    e["order"] = ctx.lattice().order(rep);
    e["representative"] = ctx.lattice().elements(rep);
    e["label"] = class_label(ctx, c);
    if (ctx.left_free(rep)) {
      e["degree"] = ctx.degree_of_class(c);
      e["type"] = TypeRegistry::instance().name(ctx.type_of_class(c));
    }
    list.push_back(std::move(e));
  }
  j["basis"] = std::move(list);
  return j;
}

Json element_json(const BurnsideElement& a) {
  const PairContext& ctx = *a.ctx();
  Json j;
  j["pair"] = pair_json(ctx);
  j["system"] = flavor_name(a.system().flavor());
  Json terms = Json::array();
  for (const auto& [c, r] : a.coeffs()) {
    Json t;
    t["class"] = c;
    t["class_rep"] = ctx.lattice().elements(ctx.class_rep(c));
    t["label"] = class_label(ctx, c);
    t["num"] = r.get_num().get_str();
    t["den"] = r.get_den().get_str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json ghost_json(const GhostElement& x) {
  const PairContext& ctx = *x.ctx();
  Json j;
  j["pair"] = pair_json(ctx);
  Json terms = Json::array();
  for (const auto& [c, r] : x.coeffs()) {
    Triple t = ctx.triple_of(ctx.class_rep(c));
    Json e;
    e["class"] = c;
    e["U"] = t.image_side().elements();
    e["V"] = t.domain_side().elements();
    Json alpha = Json::array();
    for (uint16_t v : t.domain_side().elements())
      alpha.push_back(Json::array({v, t.alpha.apply(v)}));
    e["alpha"] = std::move(alpha);
    e["degree"] = ctx.degree_of_class(c);
    e["type_key"] = TypeRegistry::instance().name(ctx.type_of_class(c));
    e["num"] = r.get_num().get_str();
    e["den"] = r.get_den().get_str();
    terms.push_back(std::move(e));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json mark_matrix_json(const SubgroupSystem& system) {
  Json j;
  j["pair"] = pair_json(*system.ctx());
  j["system"] = flavor_name(system.flavor());
  Json labels = Json::array();
  for (int c : system.classes())
    labels.push_back(class_label(*system.ctx(), c));
  j["labels"] = std::move(labels);
  j["matrix"] = mark_matrix(system);
  return j;
}

Json equivariant_matrix_json(const EquivariantMatrix& m) {
  Json j;
  j["block"] = m.block_label;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json rl = Json::array(), cl = Json::array();
  for (const auto& t : m.row_labels) rl.push_back(t);
  for (const auto& t : m.col_labels) cl.push_back(t);
  j["row_labels"] = std::move(rl);
  j["col_labels"] = std::move(cl);
  Json entries = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rational_json(m.at(r, c)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json fusion_json(const FusionSystem& f) {
  const GroupPtr& s = f.base();
  const auto& lat = s->lattice();
  Json j;
  j["group"] = s->name();
  j["prime"] = f.prime();
  j["classes"] = f.system().classes();
  Json reps = Json::array();
  for (int c : f.system().classes())
    reps.push_back(f.ctx()->lattice().elements(f.ctx()->class_rep(c)));
  j["class_reps"] = std::move(reps);
  Json tables = Json::array();
  for (int cp = 0; cp < lat.num_classes(); ++cp)
    for (int cq = 0; cq < lat.num_classes(); ++cq) {
      Subgroup p(s, lat.class_rep(cp));
      Subgroup q(s, lat.class_rep(cq));
      auto homs = f.morphisms(p, q);
      if (homs.empty()) continue;
      Json e;
      e["P"] = lat.class_rep(cp);
      e["Q"] = lat.class_rep(cq);
      Json maps = Json::array();
      for (const GroupHom& h : homs) maps.push_back(h.table());
      e["maps"] = std::move(maps);
      tables.push_back(std::move(e));
    }
  j["morphism_tables"] = std::move(tables);
  return j;
}

Json idempotent_report_json(const IdempotentReport& rep, const FusionSystem& f,
                            bool saturated) {
  Json j;
  j["group"] = f.base()->name();
  j["prime"] = f.prime();
  j["saturated"] = saturated;
  j["is_idempotent"] = rep.is_idempotent;
  j["frobenius_left"] = rep.frobenius_left;
  j["frobenius_right"] = rep.frobenius_right;
  j["symmetric"] = rep.symmetric;
  j["fix_equals_system"] = rep.fix_equals_system;
  j["fix_classes"] = rep.fix_classes;
  Json marks = Json::array();
  {
    const PairContext& ctx = *f.ctx();
    auto all = rep.omega_standard.all_marks();
    for (int c : f.system().classes()) {
      Json m;
      m["class"] = c;
      m["p1_order"] = f.base()->lattice().order(
          ctx.goursat(ctx.class_rep(c)).p1);
      m["value"] = rational_json(all[c]);
      marks.push_back(std::move(m));
    }
  }
  j["marks"] = std::move(marks);
  j["standard_p_integral"] = rep.standard_p_integral;
  j["worst_standard_valuation"] = rep.worst_standard_valuation;
  Json satfs = Json::array();
  for (const auto& row : rep.sat_fs) {
    Json e;
    e["subgroup_class"] = row.subgroup_class;
    e["subgroup"] =
        f.base()->lattice().elements(f.base()->lattice().class_rep(
            row.subgroup_class));
    e["value"] = rational_json(row.value);
    e["p_integral"] = row.p_integral;
    satfs.push_back(std::move(e));
  }
  j["sat_fs"] = std::move(satfs);
  j["omega_ghost"] = ghost_json(rep.omega_ghost);
  j["omega_standard"] = element_json(rep.omega_standard);
  return j;
}

Json verdicts_json(const IdempotentVerdicts& v) {
  Json j;
  j["idempotent"] = v.idempotent;
  j["frobenius_left"] = v.frobenius_left;
  j["frobenius_right"] = v.frobenius_right;
  j["fix_subgroup_closed"] = v.fix_subgroup_closed;
  j["diagonal_in_fix"] = v.diagonal_in_fix;
  j["in_idem"] = v.in_idem;
  j["fix_classes"] = v.fix_classes;
  j["standard_p_integral"] = v.standard_p_integral;
  j["worst_standard_valuation"] = v.worst_standard_valuation;
  j["ghost_p_integral"] = v.ghost_p_integral;
  j["worst_ghost_valuation"] = v.worst_ghost_valuation;
  return j;
}

Json saturation_json(const SaturationResult& r, const FusionSystem& f) {
  Json j;
  j["group"] = f.base()->name();
  j["prime"] = f.prime();
  j["saturated"] = r.saturated;
  j["sylow_axiom"] = r.sylow_axiom;
  j["extension_axiom"] = r.extension_axiom;
  if (r.witness) {
    Json w;
    w["P"] = r.witness->domain().elements();
    Json vals = Json::array();
    for (uint16_t e : r.witness->domain().elements())
      vals.push_back(Json::array({e, r.witness->apply(e)}));
    w["phi"] = std::move(vals);
    w["extender"] = f.base()->lattice().elements(r.witness_extender);
    j["witness"] = std::move(w);
  }
  return j;
}

Json stats_json(const SaturationStats& s, const FusionSystem& f) {
  Json j;
  j["group"] = f.base()->name();
  j["prime"] = f.prime();
  j["all_sat_fs"] = s.all_sat_fs;
  Json rows = Json::array();
  for (const auto& row : s.per_class) {
    Json e;
    e["subgroup_class"] = row.subgroup_class;
    e["f_class"] = row.f_class;
    e["fully_normalized"] = row.fully_normalized;
    e["fully_centralized"] = row.fully_centralized;
    e["automizer_sylow"] = row.automizer_sylow;
    e["sat_fs_value"] = rational_json(row.sat_fs_value);
    e["sat_fs_integral"] = row.sat_fs_integral;
    e["f_count"] = s.f_class_normalized_count[row.f_class];
    rows.push_back(std::move(e));
  }
  j["per_class"] = std::move(rows);
  return j;
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << "  ";
      os << row[i];
      if (i + 1 < row.size())
        os << std::string(widths[i] - row[i].size(), ' ');
    }
    os << "\n";
  }
  return os.str();
}

std::string render_csv(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << row[i];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace dbr
