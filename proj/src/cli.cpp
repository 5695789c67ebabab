#include "dbr/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "dbr/biset.hpp"
#include "dbr/catalog.hpp"
#include "dbr/io.hpp"

namespace dbr {

namespace {

SubgroupSystem make_system(const PairPtr& ctx, const std::string& name) {
  if (name == "all") return SubgroupSystem::all(ctx);
  if (name == "leftfree") return SubgroupSystem::left_free(ctx);
  if (name == "bifree") return SubgroupSystem::bifree(ctx);
  throw Error("unknown system flavor '" + name +
              "' (expected all, leftfree or bifree)");
}

// Basis-element literals: [Δ]/[delta], [1], [1x H], [G x1], [class:k]
// resolved against the printed basis listing of the system.
int parse_basis_class(const SubgroupSystem& system, std::string lit) {
  const PairContext& ctx = *system.ctx();
  std::string s;
  for (char c : lit)
    if (c != '[' && c != ']' && c != ' ') s += c;
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  auto check_member = [&](int cls) {
    if (!system.contains_class(cls))
      throw SystemClosureError("literal '" + lit +
                               "' names a class outside the system");
    return cls;
  };
  if (s == "1")
    return check_member(ctx.lattice().class_of(ctx.lattice().trivial_index()));
  if (s == "delta" || s == "d" || s == "Δ") {
    if (!ctx.left_group()->same_group(*ctx.right_group()))
      throw Error("[delta] needs matching groups");
    Subgroup full(ctx.left_group(),
                  ctx.left_group()->lattice().full_index());
    return check_member(
        ctx.lattice().class_of(ctx.graph_of(identity_hom(full))));
  }
  if (s.rfind("class:", 0) == 0 || s.rfind("orbit:", 0) == 0) {
    int k = std::atoi(s.c_str() + 6);
    const auto& cls = system.classes();
    if (k < 0 || static_cast<size_t>(k) >= cls.size())
      throw Error("basis index " + std::to_string(k) + " out of range (" +
                  std::to_string(cls.size()) + " classes)");
    return cls[k];
  }
  auto lower = [](std::string t) {
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return t;
  };
  if (s.rfind("1x", 0) == 0 && s.substr(2) == lower(ctx.right_group()->name())) {
    std::vector<uint16_t> elems;
    for (int h = 0; h < ctx.right_group()->order(); ++h)
      elems.push_back(static_cast<uint16_t>(ctx.encode(0, h)));
    std::sort(elems.begin(), elems.end());
    return check_member(ctx.lattice().class_of(ctx.lattice().index_of(elems)));
  }
  if (s.size() > 2 && s.substr(s.size() - 2) == "x1" &&
      s.substr(0, s.size() - 2) == lower(ctx.left_group()->name())) {
    std::vector<uint16_t> elems;
    for (int g = 0; g < ctx.left_group()->order(); ++g)
      elems.push_back(static_cast<uint16_t>(ctx.encode(g, 0)));
    std::sort(elems.begin(), elems.end());
    return check_member(ctx.lattice().class_of(ctx.lattice().index_of(elems)));
  }
  throw Error("cannot parse basis literal '" + lit + "'");
}

FusionSystem select_fusion(const GroupPtr& s, int prime,
                           const std::string& selector) {
  if (selector == "inner") return FusionSystem::inner(s, prime);
  if (selector.rfind("from-group:", 0) == 0) {
    GroupPtr ambient = load_group(selector.substr(11));
    FusionSystem f = FusionSystem::from_group(ambient, prime);
    if (f.base()->same_group(*s)) return f;
    Subgroup from(f.base(), f.base()->lattice().full_index());
    Subgroup to(s, s->lattice().full_index());
    auto isos = homomorphisms(from, to, HomKind::Iso);
    if (isos.empty())
      throw PreconditionError("the Sylow subgroup of " + ambient->name() +
                              " is not isomorphic to " + s->name());
    return f.transported(isos.front());
  }
  if (selector.rfind("index:", 0) == 0) {
    int k = std::atoi(selector.c_str() + 6);
    auto all = FusionSystem::enumerate_all(s, prime);
    if (k < 0 || static_cast<size_t>(k) >= all.size())
      throw Error("fusion index " + std::to_string(k) + " out of range (" +
                  std::to_string(all.size()) + " systems)");
    return all[k];
  }
  if (selector.rfind("generate:", 0) == 0) {
    std::ifstream in(selector.substr(9));
    if (!in)
      throw LoadError("cannot open generator file '" + selector.substr(9) +
                      "'");
    std::stringstream ss;
    ss << in.rdbuf();
    Json j;
    try {
      j = Json::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
      throw LoadError(std::string("invalid generator file: ") + e.what());
    }
    std::vector<GroupHom> gens;
    const auto& lat = s->lattice();
    for (const auto& g : j.value("generators", Json::array())) {
      std::vector<uint16_t> dom = g.at("domain").get<std::vector<uint16_t>>();
      std::vector<int> vals = g.at("values").get<std::vector<int>>();
      if (dom.size() != vals.size())
        throw LoadError("generator domain/values size mismatch");
      std::sort(dom.begin(), dom.end());
      std::vector<int16_t> table(s->order(), -1);
      std::vector<uint16_t> img;
      for (size_t i = 0; i < dom.size(); ++i) {
        table[dom[i]] = static_cast<int16_t>(vals[i]);
        img.push_back(static_cast<uint16_t>(vals[i]));
      }
      std::sort(img.begin(), img.end());
      gens.emplace_back(Subgroup(s, lat.index_of(dom)),
                        Subgroup(s, lat.index_of(img)), std::move(table));
    }
    return FusionSystem::generate(s, prime, gens);
  }
  throw Error("unknown fusion selector '" + selector +
              "' (expected inner, from-group:<G>, index:<k> or "
              "generate:<file>)");
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void emit_element(std::ostream& out, const BurnsideElement& a,
                  OutputFormat format) {
  if (format == OutputFormat::Jsonf) {
    emit_json(out, element_json(a));
    return;
  }
  std::vector<std::vector<std::string>> rows{{"class", "label", "coeff"}};
  for (const auto& [c, r] : a.coeffs())
    rows.push_back({std::to_string(c), class_label(*a.ctx(), c),
                    to_string(r)});
  out << (format == OutputFormat::Csv ? render_csv(rows) : render_table(rows));
}

void emit_ghost(std::ostream& out, const GhostElement& x,
                OutputFormat format) {
  if (format == OutputFormat::Jsonf) {
    emit_json(out, ghost_json(x));
    return;
  }
  std::vector<std::vector<std::string>> rows{
      {"class", "label", "degree", "type", "coeff"}};
  for (const auto& [c, r] : x.coeffs())
    rows.push_back({std::to_string(c), class_label(*x.ctx(), c),
                    std::to_string(x.ctx()->degree_of_class(c)),
                    TypeRegistry::instance().name(x.ctx()->type_of_class(c)),
                    to_string(r)});
  out << (format == OutputFormat::Csv ? render_csv(rows) : render_table(rows));
}

struct CommonArgs {
  std::vector<std::string> positionals;
  std::string system = "leftfree";
  std::string format = "table";
  std::vector<std::string> groups;
  std::vector<std::string> literals;

  // Group specs and bracketed basis literals share the positional
  // slots; split them apart and check the counts.
  void partition(int nlits) {
    for (const auto& p : positionals) {
      if (!p.empty() && p.front() == '\x01')
        literals.push_back(p.substr(1));
      else
        groups.push_back(p);
    }
    if (groups.empty() || groups.size() > 3)
      throw Error("expected between 1 and 3 group specs");
    if (static_cast<int>(literals.size()) != nlits)
      throw Error("expected " + std::to_string(nlits) +
                  " basis literal(s) in brackets, got " +
                  std::to_string(literals.size()));
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact computations in double Burnside rings"};
  app.require_subcommand(1);

  // groups
  auto* cmd_groups = app.add_subcommand("groups", "list the group catalog");
  std::vector<std::string> group_specs;
  std::string format = "table";
  cmd_groups->add_option("spec", group_specs, "group specs to describe");
  cmd_groups->add_option("--format", format, "table|json|csv");

  // subgroups
  auto* cmd_subgroups =
      app.add_subcommand("subgroups", "subgroup lattice of a group");
  std::string sg_spec;
  bool sg_classes = false;
  std::string sg_format = "table";
  cmd_subgroups->add_option("group", sg_spec, "group spec")->required();
  cmd_subgroups->add_flag("--classes", sg_classes,
                          "one row per conjugacy class");
  cmd_subgroups->add_option("--format", sg_format, "table|json|csv");

  auto add_pair_cmd = [&](const char* name, const char* help, CommonArgs& st,
                          const char* default_system) {
    auto* cmd = app.add_subcommand(name, help);
    st.system = default_system;
    cmd->add_option("args", st.positionals,
                    "group spec(s) followed by bracketed basis literal(s)")
        ->required()
        ->expected(-1);
    cmd->add_option("--system", st.system, "all|leftfree|bifree");
    cmd->add_option("--format", st.format, "table|json|csv");
    return cmd;
  };

  CommonArgs basis_a, marks_a, bmul_a, rho_a, rhoinv_a, gmul_a, grading_a,
      sigma_a, sigmat_a;
  auto* cmd_basis =
      add_pair_cmd("basis", "standard basis of B^S(G,H)", basis_a, "leftfree");
  auto* cmd_marks =
      add_pair_cmd("marks", "table of marks of B^S(G,H)", marks_a, "leftfree");
  auto* cmd_bmul = add_pair_cmd(
      "bmul", "Mackey product of two standard basis elements", bmul_a,
      "leftfree");
  auto* cmd_rho = add_pair_cmd(
      "rho", "mark homomorphism of a standard basis element", rho_a,
      "leftfree");
  auto* cmd_rhoinv = add_pair_cmd(
      "rho-inv", "inverse mark homomorphism of an orbit sum", rhoinv_a,
      "leftfree");
  auto* cmd_gmul = add_pair_cmd("ghost-mul", "ghost product of two orbit sums",
                                gmul_a, "leftfree");
  auto* cmd_grading = add_pair_cmd(
      "grading", "degree decomposition of a standard basis element", grading_a,
      "leftfree");
  auto* cmd_sigma = add_pair_cmd(
      "sigma", "equivariant matrix blocks of a bifree element", sigma_a,
      "bifree");
  std::string sigma_type;
  cmd_sigma->add_option("--type", sigma_type, "restrict to one type key");
  auto* cmd_sigmat = add_pair_cmd(
      "sigma-tilde", "endomorphism blocks of a bifree element", sigmat_a,
      "bifree");

  // fusion-flavored commands
  std::string fu_group, fu_ambient, fu_selector = "inner",
                                    fu_format = "table";
  int fu_prime = 2;
  auto add_fusion_opts = [&](CLI::App* cmd, bool with_selector) {
    cmd->add_option("--group", fu_group, "the p-group S")->required();
    cmd->add_option("--prime", fu_prime, "the prime p")->required();
    if (with_selector)
      cmd->add_option("--fusion", fu_selector,
                      "inner | from-group:<G> | index:<k> | generate:<file>");
    cmd->add_option("--format", fu_format, "table|json");
  };
  auto* cmd_ffg = app.add_subcommand("fusion-from-group",
                                     "fusion system of a group on its Sylow "
                                     "subgroup");
  cmd_ffg->add_option("--ambient", fu_ambient, "ambient group spec")
      ->required();
  cmd_ffg->add_option("--group", fu_group,
                      "present the system on this isomorphic catalog group");
  cmd_ffg->add_option("--prime", fu_prime, "the prime p")->required();
  cmd_ffg->add_option("--format", fu_format, "table|json");

  auto* cmd_fenum =
      app.add_subcommand("fusion-enumerate", "all fusion systems on S");
  add_fusion_opts(cmd_fenum, false);
  auto* cmd_omega =
      app.add_subcommand("omega", "characteristic idempotent of a fusion "
                                  "system");
  add_fusion_opts(cmd_omega, true);
  auto* cmd_classify = app.add_subcommand(
      "classify", "idempotent membership verdicts for omega of a fusion "
                  "system");
  add_fusion_opts(cmd_classify, true);
  auto* cmd_saturated =
      app.add_subcommand("saturated", "saturation axioms of a fusion system");
  add_fusion_opts(cmd_saturated, true);
  auto* cmd_triangle = app.add_subcommand(
      "triangle", "verify the fusion-system/idempotent triangle on S");
  add_fusion_opts(cmd_triangle, false);

  try {
    // Bracketed basis literals are tagged before parsing; CLI11 would
    // otherwise strip the brackets as container syntax.
    std::vector<std::string> rev;
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
      if (it->size() >= 2 && it->front() == '[' && it->back() == ']')
        rev.push_back("\x01" + *it);
      else
        rev.push_back(*it);
    }
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  auto pair_of = [&](const CommonArgs& st) {
    GroupPtr g = load_group(st.groups.at(0));
    GroupPtr h = st.groups.size() > 1 ? load_group(st.groups.at(1)) : g;
    return PairContext::get(g, h);
  };
  auto third_of = [&](const CommonArgs& st) {
    if (st.groups.size() == 3) return load_group(st.groups.at(2));
    return st.groups.size() > 1 ? load_group(st.groups.at(1))
                                : load_group(st.groups.at(0));
  };

  try {
    if (*cmd_groups) {
      OutputFormat f = parse_format(format);
      if (group_specs.empty()) {
        if (f == OutputFormat::Jsonf) {
          emit_json(out, Json{{"catalog", catalog_names()}});
        } else {
          std::vector<std::vector<std::string>> rows{{"catalog"}};
          for (const auto& n : catalog_names()) rows.push_back({n});
          out << (f == OutputFormat::Csv ? render_csv(rows)
                                         : render_table(rows));
        }
        return 0;
      }
      for (const auto& spec : group_specs) {
        GroupPtr g = load_group(spec);
        if (f == OutputFormat::Jsonf) {
          emit_json(out, group_json(*g));
        } else {
          out << g->name() << ": order " << g->order() << ", "
              << g->lattice().size() << " subgroups in "
              << g->lattice().num_classes() << " classes\n";
        }
      }
      return 0;
    }
    if (*cmd_subgroups) {
      GroupPtr g = load_group(sg_spec);
      OutputFormat f = parse_format(sg_format);
      Json j = subgroups_json(g, sg_classes);
      if (f == OutputFormat::Jsonf) {
        emit_json(out, j);
      } else {
        std::vector<std::vector<std::string>> rows{
            {"index", "order", "class", "normal", "elements"}};
        for (const auto& e : j["subgroups"]) {
          std::string elems;
          for (const auto& x : e["elements"])
            elems += (elems.empty() ? "" : " ") + x.dump();
          rows.push_back({e["index"].dump(), e["order"].dump(),
                          e["class"].dump(), e["normal"].dump(), elems});
        }
        out << (f == OutputFormat::Csv ? render_csv(rows)
                                       : render_table(rows));
      }
      return 0;
    }
    if (*cmd_basis) {
      basis_a.partition(0);
      auto system = make_system(pair_of(basis_a), basis_a.system);
      OutputFormat f = parse_format(basis_a.format);
      if (f == OutputFormat::Jsonf) {
        emit_json(out, basis_json(system));
      } else {
        std::vector<std::vector<std::string>> rows{
            {"index", "class", "order", "label"}};
        int index = 0;
        for (int c : system.classes())
          rows.push_back(
              {std::to_string(index++), std::to_string(c),
               std::to_string(
                   system.ctx()->lattice().order(system.ctx()->class_rep(c))),
               class_label(*system.ctx(), c)});
        out << (f == OutputFormat::Csv ? render_csv(rows)
                                       : render_table(rows));
      }
      return 0;
    }
    if (*cmd_marks) {
      marks_a.partition(0);
      auto system = make_system(pair_of(marks_a), marks_a.system);
      OutputFormat f = parse_format(marks_a.format);
      if (f == OutputFormat::Jsonf) {
        emit_json(out, mark_matrix_json(system));
        return 0;
      }
      auto matrix = mark_matrix(system);
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header{""};
      for (int c : system.classes())
        header.push_back(class_label(*system.ctx(), c));
      rows.push_back(std::move(header));
      for (size_t i = 0; i < matrix.size(); ++i) {
        std::vector<std::string> row{
            class_label(*system.ctx(), system.classes()[i])};
        for (long v : matrix[i]) row.push_back(std::to_string(v));
        rows.push_back(std::move(row));
      }
      out << (f == OutputFormat::Csv ? render_csv(rows) : render_table(rows));
      return 0;
    }
    if (*cmd_bmul) {
      bmul_a.partition(2);
      auto gh = pair_of(bmul_a);
      auto hk = PairContext::get(gh->right_group(), third_of(bmul_a));
      auto sys_a = make_system(gh, bmul_a.system);
      auto sys_b = make_system(hk, bmul_a.system);
      auto a = BurnsideElement::basis_element(
          sys_a, parse_basis_class(sys_a, bmul_a.literals.at(0)));
      auto b = BurnsideElement::basis_element(
          sys_b, parse_basis_class(sys_b, bmul_a.literals.at(1)));
      emit_element(out, mackey_product(a, b), parse_format(bmul_a.format));
      return 0;
    }
    if (*cmd_rho) {
      rho_a.partition(1);
      auto system = make_system(pair_of(rho_a), rho_a.system);
      auto a = BurnsideElement::basis_element(
          system, parse_basis_class(system, rho_a.literals.at(0)));
      emit_ghost(out, rho(a), parse_format(rho_a.format));
      return 0;
    }
    if (*cmd_rhoinv) {
      rhoinv_a.partition(1);
      auto system = make_system(pair_of(rhoinv_a), rhoinv_a.system);
      auto x = GhostElement::basis_element(
          system, parse_basis_class(system, rhoinv_a.literals.at(0)));
      emit_element(out, rho_inverse(x), parse_format(rhoinv_a.format));
      return 0;
    }
    if (*cmd_gmul) {
      gmul_a.partition(2);
      auto gh = pair_of(gmul_a);
      auto hk = PairContext::get(gh->right_group(), third_of(gmul_a));
      auto sys_a = make_system(gh, gmul_a.system);
      auto sys_b = make_system(hk, gmul_a.system);
      auto x = GhostElement::basis_element(
          sys_a, parse_basis_class(sys_a, gmul_a.literals.at(0)));
      auto y = GhostElement::basis_element(
          sys_b, parse_basis_class(sys_b, gmul_a.literals.at(1)));
      emit_ghost(out, ghost_product(x, y), parse_format(gmul_a.format));
      return 0;
    }
    if (*cmd_grading) {
      grading_a.partition(1);
      auto system = make_system(pair_of(grading_a), grading_a.system);
      auto a = BurnsideElement::basis_element(
          system, parse_basis_class(system, grading_a.literals.at(0)));
      OutputFormat f = parse_format(grading_a.format);
      auto parts = grading(rho(a));
      if (f == OutputFormat::Jsonf) {
        Json j;
        j["pair"] = Json{{"left", system.ctx()->left_group()->name()},
                         {"right", system.ctx()->right_group()->name()}};
        Json arr = Json::array();
        for (const auto& [deg, ghost_part] : parts) {
          Json e;
          e["degree"] = deg;
          e["ghost"] = ghost_json(ghost_part);
          e["standard"] = element_json(rho_inverse(ghost_part));
          arr.push_back(std::move(e));
        }
        j["components"] = std::move(arr);
        emit_json(out, j);
      } else {
        for (const auto& [deg, ghost_part] : parts) {
          out << "degree " << deg << ":\n";
          emit_element(out, rho_inverse(ghost_part), f);
        }
      }
      return 0;
    }
    if (*cmd_sigma) {
      sigma_a.partition(1);
      auto system = make_system(pair_of(sigma_a), sigma_a.system);
      auto a = BurnsideElement::basis_element(
          system, parse_basis_class(system, sigma_a.literals.at(0)));
      auto blocks = sigma_blocks(a);
      OutputFormat f = parse_format(sigma_a.format);
      Json arr = Json::array();
      for (const auto& m : blocks) {
        if (!sigma_type.empty() && m.block_label != sigma_type) continue;
        if (f == OutputFormat::Jsonf) {
          arr.push_back(equivariant_matrix_json(m));
        } else {
          out << "type " << m.block_label << " (" << m.rows() << "x"
              << m.cols() << "):\n";
          std::vector<std::vector<std::string>> rows;
          for (int r = 0; r < m.rows(); ++r) {
            std::vector<std::string> row;
            for (int c = 0; c < m.cols(); ++c)
              row.push_back(to_string(m.at(r, c)));
            rows.push_back(std::move(row));
          }
          out << (f == OutputFormat::Csv ? render_csv(rows)
                                         : render_table(rows));
        }
      }
      if (f == OutputFormat::Jsonf) emit_json(out, Json{{"blocks", arr}});
      return 0;
    }
    if (*cmd_sigmat) {
      sigmat_a.partition(1);
      auto system = make_system(pair_of(sigmat_a), sigmat_a.system);
      auto a = BurnsideElement::basis_element(
          system, parse_basis_class(system, sigmat_a.literals.at(0)));
      auto blocks = sigma_tilde_blocks(a, system);
      OutputFormat f = parse_format(sigmat_a.format);
      if (f == OutputFormat::Jsonf) {
        Json arr = Json::array();
        for (const auto& m : blocks) arr.push_back(equivariant_matrix_json(m));
        emit_json(out, Json{{"blocks", arr}});
      } else {
        for (const auto& m : blocks) {
          out << "block " << m.block_label << " (" << m.rows() << "x"
              << m.cols() << "):\n";
          std::vector<std::vector<std::string>> rows;
          for (int r = 0; r < m.rows(); ++r) {
            std::vector<std::string> row;
            for (int c = 0; c < m.cols(); ++c)
              row.push_back(to_string(m.at(r, c)));
            rows.push_back(std::move(row));
          }
          out << (f == OutputFormat::Csv ? render_csv(rows)
                                         : render_table(rows));
        }
      }
      return 0;
    }
    if (*cmd_ffg) {
      GroupPtr ambient = load_group(fu_ambient);
      FusionSystem f = FusionSystem::from_group(ambient, fu_prime);
      if (!fu_group.empty()) {
        GroupPtr s = load_group(fu_group);
        if (!f.base()->same_group(*s)) {
          Subgroup from(f.base(), f.base()->lattice().full_index());
          Subgroup to(s, s->lattice().full_index());
          auto isos = homomorphisms(from, to, HomKind::Iso);
          if (isos.empty())
            throw PreconditionError("the Sylow subgroup of " +
                                    ambient->name() +
                                    " is not isomorphic to " + s->name());
          f = f.transported(isos.front());
        }
      }
      if (parse_format(fu_format) == OutputFormat::Jsonf)
        emit_json(out, fusion_json(f));
      else
        out << "fusion system on " << f.base()->name() << " with "
            << f.system().classes().size() << " classes\n";
      return 0;
    }
    if (*cmd_fenum) {
      GroupPtr s = load_group(fu_group);
      auto systems = FusionSystem::enumerate_all(s, fu_prime);
      if (parse_format(fu_format) == OutputFormat::Jsonf) {
        Json arr = Json::array();
        for (size_t i = 0; i < systems.size(); ++i) {
          Json e;
          e["index"] = i;
          e["classes"] = systems[i].system().classes();
          e["saturated"] = is_saturated(systems[i]).saturated;
          arr.push_back(std::move(e));
        }
        emit_json(out, Json{{"group", s->name()},
                            {"prime", fu_prime},
                            {"systems", arr}});
      } else {
        std::vector<std::vector<std::string>> rows{
            {"index", "classes", "saturated"}};
        for (size_t i = 0; i < systems.size(); ++i)
          rows.push_back(
              {std::to_string(i),
               std::to_string(systems[i].system().classes().size()),
               is_saturated(systems[i]).saturated ? "yes" : "no"});
        out << render_table(rows);
      }
      return 0;
    }
    if (*cmd_omega || *cmd_classify || *cmd_saturated) {
      GroupPtr s = load_group(fu_group);
      FusionSystem f = select_fusion(s, fu_prime, fu_selector);
      if (*cmd_saturated) {
        SaturationResult r = is_saturated(f);
        if (parse_format(fu_format) == OutputFormat::Jsonf) {
          emit_json(out, saturation_json(r, f));
        } else {
          out << (r.saturated ? "saturated\n" : "not saturated\n");
          if (r.witness) {
            out << "witness P = {";
            for (size_t i = 0; i < r.witness->domain().elements().size(); ++i)
              out << (i ? " " : "")
                  << r.witness->domain().elements()[i];
            out << "}\n";
          }
        }
        return 0;
      }
      if (*cmd_classify) {
        IdempotentReport rep = omega(f);
        IdempotentVerdicts v =
            classify_idempotent(rep.omega_standard, fu_prime);
        if (parse_format(fu_format) == OutputFormat::Jsonf) {
          emit_json(out, verdicts_json(v));
        } else {
          out << "in_idem " << (v.in_idem ? "yes" : "no")
              << ", standard p-integral "
              << (v.standard_p_integral ? "yes" : "no")
              << " (worst valuation " << v.worst_standard_valuation
              << "), ghost p-integral " << (v.ghost_p_integral ? "yes" : "no")
              << "\n";
        }
        return 0;
      }
      IdempotentReport rep = omega(f);
      bool sat = is_saturated(f).saturated;
      if (parse_format(fu_format) == OutputFormat::Jsonf) {
        emit_json(out, idempotent_report_json(rep, f, sat));
      } else {
        out << "omega of a fusion system on " << f.base()->name()
            << " (saturated: " << (sat ? "yes" : "no") << ")\n";
        emit_element(out, rep.omega_standard, OutputFormat::Table);
      }
      return 0;
    }
    if (*cmd_triangle) {
      GroupPtr s = load_group(fu_group);
      TriangleReport rep = triangle_check(s, fu_prime);
      if (parse_format(fu_format) == OutputFormat::Jsonf) {
        Json j;
        j["group"] = s->name();
        j["prime"] = fu_prime;
        j["systems"] = rep.systems;
        j["fix_matches_system"] = rep.fix_matches_system;
        j["omega_injective"] = rep.omega_injective;
        j["idempotents_valid"] = rep.idempotents_valid;
        emit_json(out, j);
      } else {
        out << rep.systems << " systems, triangle "
            << (rep.fix_matches_system && rep.omega_injective ? "commutes"
                                                              : "FAILS")
            << "\n";
      }
      return 0;
    }
  } catch (const LoadError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command executed\n";
  return 1;
}

}  // namespace dbr
