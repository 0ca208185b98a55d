#include "lie2/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

#ifndef LIE2_FIXTURE_DIR
#define LIE2_FIXTURE_DIR "fixtures"
#endif

using namespace lie2;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2 };

struct Options {
  std::string fixtures;
  std::string target;
  std::string suite;
  std::string rep;
  std::string xmod;
  Index max_degree = 3;
  Index degree = 0;
  bool trivial = false;
  bool interpret = false;
  std::string sub;
  std::vector<std::string> files;
  std::string what = "nabla";
  std::string object;
};

Workspace open_workspace(const Options& o) {
  Workspace ws;
  std::string dir = o.fixtures;
  if (dir.empty()) {
    const char* env = std::getenv("LIE2_FIXTURES");
    dir = env ? env : LIE2_FIXTURE_DIR;
  }
  if (fs::is_directory(dir)) ws.load_dir(dir);
  return ws;
}

// A target is either a loaded name or a file to load.
std::vector<std::string> resolve_target(Workspace& ws, const std::string& target) {
  if (ws.contains(target)) return {target};
  if (fs::is_regular_file(target)) return ws.load_file(target);
  throw InputError("unknown target " + target);
}

int emit(const Json& j, bool ok) {
  std::cout << j.dump(2) << "\n";
  return ok ? kOk : kFailure;
}

Report check_one(const Workspace& ws, const std::string& name, const std::string& rep_override) {
  const std::string k = ws.kind(name);
  if (k == "lie_algebra") return check_lie_algebra(ws.lie_algebra(name));
  if (k == "crossed_module") return check_crossed_module(ws.crossed_module(name));
  if (k == "two_vect") return {};
  if (k == "two_rep") {
    TwoRep r = ws.two_rep(name);
    Report out = check_crossed_module(r.source);
    if (out.empty()) append(out, check_two_rep(r));
    return out;
  }
  if (k == "extension_data") return cocycle_check(ws.extension_data(name, rep_override));
  if (k == "triv_extension_data") return triv_conditions(ws.triv_extension_data(name));
  throw InputError("cannot check objects of kind " + k);
}

int cmd_check(const Options& o) {
  Workspace ws = open_workspace(o);
  if (o.suite == "identities" || o.suite == "complex") {
    if (o.rep.empty()) throw InputError("--suite needs --rep");
    CochainComplex cx(ws.two_rep(o.rep));
    Report rep;
    if (o.suite == "identities") {
      rep = identity_suite(cx, o.max_degree);
    } else {
      for (Index n = 0; n < o.max_degree + 1; ++n)
        if (!is_zero(SparseRatMatrix(cx.nabla_matrix(n + 1) * cx.nabla_matrix(n))))
          rep.push_back({"nabla-squared", {n}, "nabla_{n+1} nabla_n != 0"});
    }
    Json j = to_json(rep);
    j["suite"] = o.suite;
    j["rep"] = o.rep;
    j["max_degree"] = o.max_degree;
    return emit(j, rep.empty());
  }
  if (!o.suite.empty()) throw InputError("unknown suite " + o.suite);
  if (o.target.empty()) throw InputError("check needs a target or --suite");
  Json checks = Json::array();
  bool ok = true;
  for (const auto& name : resolve_target(ws, o.target)) {
    Report r = check_one(ws, name, o.rep);
    Json j = to_json(r);
    checks.push_back({{"name", name}, {"kind", ws.kind(name)}, {"ok", r.empty()}, {"violations", j["violations"]}});
    ok = ok && r.empty();
  }
  return emit({{"ok", ok}, {"checks", checks}}, ok);
}

int cmd_cohomology(const Options& o) {
  Workspace ws = open_workspace(o);
  if (o.trivial) {
    if (o.xmod.empty()) throw InputError("--trivial needs --xmod");
    CohomologyGroup H = trivial_total_cohomology(ws.crossed_module(o.xmod), o.degree);
    Json reps = Json::array();
    for (Index j = 0; j < H.representatives.cols(); ++j) {
      Json v = Json::array();
      for (Index i = 0; i < H.representatives.rows(); ++i) v.push_back(to_json(H.representatives(i, j)));
      reps.push_back(v);
    }
    return emit({{"xmod", o.xmod}, {"trivial", true}, {"degree", H.degree}, {"dim", H.dim}, {"representatives", reps}}, true);
  }
  if (o.rep.empty()) throw InputError("cohomology needs --rep or --trivial --xmod");
  TwoRep r = ws.two_rep(o.rep);
  CochainComplex cx(r);
  Json j = to_json(cx, cohomology(cx, o.degree));
  j["rep"] = o.rep;
  bool ok = true;
  if (o.interpret) {
    const Index h0 = o.degree == 0 ? j["dim"].get<Index>() : cohomology(cx, 0).dim;
    const Index h1 = o.degree == 1 ? j["dim"].get<Index>() : cohomology(cx, 1).dim;
    const Index inv = invariants_subspace(r).dim();
    Derivations D = derivations(r);
    const bool a0 = h0 == inv, a1 = h1 == D.out_dim;
    j["interpretation"] = {
        {"H0", {{"complex_dim", h0}, {"invariants_dim", inv}, {"agrees", a0}}},
        {"H1", {{"complex_dim", h1}, {"der_dim", D.der.dim()}, {"inn_dim", D.inn.dim()}, {"out_dim", D.out_dim}, {"agrees", a1}}},
        {"dims_agree", a0 && a1}};
    ok = a0 && a1;
  }
  return emit(j, ok);
}

ExtensionData data_from_file(Workspace& ws, const std::string& file, const std::string& rep) {
  std::vector<std::string> found;
  for (const auto& name : resolve_target(ws, file))
    if (ws.kind(name) == "extension_data") found.push_back(name);
  if (found.size() != 1)
    throw InputError(file + " holds " + std::to_string(found.size()) + " extension data objects; pass a name");
  return ws.extension_data(found[0], rep);
}

Json extension_json(const SplitExtension& e) {
  Json j;
  j["total"] = to_json(e.ext.total);
  j["j1"] = to_json(e.ext.j1);
  j["pi1"] = to_json(e.ext.pi1);
  j["j0"] = to_json(e.ext.j0);
  j["pi0"] = to_json(e.ext.pi0);
  j["sigma1"] = to_json(e.sigma1);
  j["sigma0"] = to_json(e.sigma0);
  return j;
}

int cmd_extension(const Options& o) {
  Workspace ws = open_workspace(o);
  auto need = [&](std::size_t k) {
    if (o.files.size() != k) throw InputError("extension " + o.sub + " takes " + std::to_string(k) + " file(s)");
  };
  auto invalid = [&](const ExtensionData& d) -> std::optional<int> {
    Report r = cocycle_check(d);
    if (r.empty()) return std::nullopt;
    Json j = to_json(r);
    j["error"] = "invalid cocycle";
    return emit(j, false);
  };
  if (o.sub == "build") {
    need(1);
    ExtensionData d = data_from_file(ws, o.files[0], o.rep);
    if (auto bad = invalid(d)) return *bad;
    SplitExtension e = build_extension(d);
    Report chk = check_extension(e);
    Json j = {{"ok", chk.empty()}, {"extension", extension_json(e)}, {"violations", to_json(chk)["violations"]}};
    return emit(j, chk.empty());
  }
  if (o.sub == "compare") {
    need(2);
    ExtensionData d1 = data_from_file(ws, o.files[0], o.rep), d2 = data_from_file(ws, o.files[1], o.rep);
    if (auto bad = invalid(d1)) return *bad;
    if (auto bad = invalid(d2)) return *bad;
    auto w = equivalence(d1, d2);
    if (!w) return emit({{"equivalent", false}, {"result", "inequivalent"}}, true);
    return emit({{"equivalent", true}, {"lambda0", to_json(w->lambda0)}, {"lambda1", to_json(w->lambda1)}}, true);
  }
  if (o.sub == "class") {
    need(1);
    ExtensionData d = data_from_file(ws, o.files[0], o.rep);
    if (auto bad = invalid(d)) return *bad;
    CochainComplex cx(d.rep);
    CohomologyGroup H = cohomology(cx, 2);
    RatVector c = class_of(cx, H, d);
    Json coords = Json::array();
    for (Index i = 0; i < c.size(); ++i) coords.push_back(to_json(c(i)));
    return emit({{"h2_dim", H.dim}, {"class", coords}, {"zero", is_zero(RatMatrix(c))}}, true);
  }
  throw InputError("unknown extension subcommand " + o.sub);
}

int cmd_dump(const Options& o) {
  Workspace ws = open_workspace(o);
  if (!o.object.empty()) {
    const std::string k = ws.kind(o.object);
    if (k == "lie_algebra") return emit(to_json(ws.lie_algebra(o.object)), true);
    if (k == "crossed_module") return emit(to_json(ws.crossed_module(o.object)), true);
    if (k == "two_vect") return emit(to_json(ws.two_vect(o.object)), true);
    if (k == "two_rep") return emit(to_json(ws.two_rep(o.object)), true);
    if (k == "extension_data") return emit(to_json(ws.extension_data(o.object, o.rep)), true);
    if (k == "triv_extension_data") return emit(to_json(ws.triv_extension_data(o.object)), true);
    throw InputError("cannot dump kind " + k);
  }
  if (o.rep.empty()) throw InputError("dump needs --rep or --object");
  CochainComplex cx(ws.two_rep(o.rep));
  if (o.what == "nabla") return emit(sparse_dump(cx.nabla_matrix(o.degree)), true);
  if (o.what == "blocks") {
    Json a = Json::array();
    for (const Degree& d : CochainComplex::blocks(o.degree))
      a.push_back({{"p", d.p}, {"q", d.q}, {"r", d.r}, {"dim", cx.space_dim(d)}, {"offset", cx.block_offset(d)}});
    return emit({{"degree", o.degree}, {"total_dim", cx.total_dim(o.degree)}, {"blocks", a}}, true);
  }
  if (o.what == "cocycles") {
    CohomologyGroup H = cohomology(cx, o.degree);
    return emit(to_json(cx, H), true);
  }
  throw InputError("unknown dump kind " + o.what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of crossed modules of Lie algebras with values in 2-representations"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--fixtures", o.fixtures, "fixture directory (default: $LIE2_FIXTURES or the bundled fixtures)");

  auto* check = app.add_subcommand("check", "validate an object, or run a suite on a representation");
  check->add_option("target", o.target, "name or JSON file");
  check->add_option("--suite", o.suite, "identities | complex")->check(CLI::IsMember({"identities", "complex"}));
  check->add_option("--rep", o.rep, "representation name");
  check->add_option("--max-degree", o.max_degree, "highest total degree (default 3)")->check(CLI::NonNegativeNumber);

  auto* coh = app.add_subcommand("cohomology", "cohomology of the total complex");
  coh->add_option("--rep", o.rep, "representation name");
  coh->add_option("--degree", o.degree, "degree n")->required()->check(CLI::NonNegativeNumber);
  coh->add_flag("--trivial", o.trivial, "trivial coefficients (needs --xmod)");
  coh->add_option("--xmod", o.xmod, "crossed module name");
  coh->add_flag("--interpret", o.interpret, "cross-check H0 with invariants and H1 with outer derivations");

  auto* ext = app.add_subcommand("extension", "extensions from cocycle data");
  ext->add_option("sub", o.sub, "build | compare | class")->required()->check(CLI::IsMember({"build", "compare", "class"}));
  ext->add_option("files", o.files, "extension data files");
  ext->add_option("--rep", o.rep, "representation name (overrides the files)");

  auto* dump = app.add_subcommand("dump", "matrices, block layouts, cocycles or resolved objects");
  dump->add_option("--rep", o.rep, "representation name");
  dump->add_option("--degree", o.degree, "total degree")->check(CLI::NonNegativeNumber);
  dump->add_option("--what", o.what, "nabla | blocks | cocycles")->check(CLI::IsMember({"nabla", "blocks", "cocycles"}));
  dump->add_option("--object", o.object, "print a resolved object in explicit form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    if (*check) return cmd_check(o);
    if (*coh) return cmd_cohomology(o);
    if (*ext) return cmd_extension(o);
    if (*dump) return cmd_dump(o);
  } catch (const InputError& e) {
    std::cerr << Json({{"error", e.what()}}).dump() << "\n";
    return kUsage;
  } catch (const InvalidCocycle& e) {
    Json j = to_json(e.report);
    j["error"] = e.what();
    std::cout << j.dump(2) << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << Json({{"error", e.what()}}).dump() << "\n";
    return kFailure;
  }
  return kUsage;
}
