// Command line front end.  Exit codes: 0 success, 1 failed verification,
// 2 malformed input or usage.  Diagnostics go to stderr; primary output goes
// to -o when given, else stdout.

#include "dioext/attach.hpp"
#include "dioext/bsd.hpp"
#include "dioext/cup.hpp"
#include "dioext/cylinder.hpp"
#include "dioext/dio.hpp"
#include "dioext/dio_io.hpp"
#include "dioext/errors.hpp"
#include "dioext/homology.hpp"
#include "dioext/manifest_io.hpp"
#include "dioext/models.hpp"
#include "dioext/product.hpp"
#include "dioext/reductions.hpp"
#include "dioext/smap.hpp"
#include "dioext/sset.hpp"
#include "dioext/sset_io.hpp"
#include "dioext/subdivision.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace dioext;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << text;
  if (!out.good()) throw ParseError("short write: " + path);
}

void emit(const std::string& text, const std::string& opath) {
  if (opath.empty())
    std::cout << text;
  else
    spit(opath, text);
}

// SMAP files name their endpoint spaces by free-form tokens; resolve them as
// paths, first as given, then next to the map file itself.
std::string resolve_near(const fs::path& anchor, const std::string& token) {
  std::error_code ec;
  if (fs::exists(token, ec)) return token;
  fs::path p = anchor.parent_path() / token;
  if (fs::exists(p, ec)) return p.string();
  throw ParseError("cannot locate '" + token + "' near " + anchor.string());
}

SimplicialMap load_bound_map(const std::string& path) {
  SmapFile mf = read_smap_file(path);
  fs::path anchor(path);
  SimplicialMap f;
  f.dom = read_sset_file(resolve_near(anchor, mf.domain));
  f.cod = read_sset_file(resolve_near(anchor, mf.codomain));
  f.image = mf.image;
  check_map(f, false);
  return f;
}

std::string group_text(const HomologyGroup& g) {
  std::vector<std::string> parts;
  if (g.betti > 0) parts.push_back("Z^" + std::to_string(g.betti));
  for (const auto& t : g.torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

int form_rank(DioForm f) {
  switch (f) {
    case DioForm::General: return 0;
    case DioForm::Quadratic: return 1;
    case DioForm::Qsym: return 2;
    case DioForm::Qskew: return 3;
  }
  return 0;
}

DioSystem reduce_to(DioSystem S, const std::string& to) {
  int want = to == "quadratic" ? 1 : to == "qsym" ? 2 : 3;
  if (S.paired && classify(S) != DioForm::Qskew)
    throw FormError("paired input is not skew-symmetric; nothing reduces to it");
  if (S.paired && want < 3)
    throw FormError("cannot reduce a paired system back to " + to);
  while (form_rank(classify(S)) < want) {
    switch (classify(S)) {
      case DioForm::General: S = to_quadratic(S).target; break;
      case DioForm::Quadratic: S = quadratic_to_qsym(S).target; break;
      case DioForm::Qsym: S = qsym_to_qskew(S).target; break;
      case DioForm::Qskew: break;
    }
  }
  return S;
}

// Quadratic coefficient readout used by `build anick`: monomials {i, j} over
// the first r variables, right hand sides ignored.
AnickCoeffs coeffs_from_system(const DioSystem& S, int r) {
  AnickCoeffs a;
  for (const auto& eq : S.eqs) {
    std::map<std::pair<int, int>, BigInt> m;
    for (const auto& t : eq.terms) {
      if (t.monomial.size() != 2)
        throw FormError("anick coefficients must be quadratic monomials");
      int i = t.monomial[0], j = t.monomial[1];
      if (i < 0 || j < 0 || i >= r || j >= r)
        throw FormError("anick coefficient variable out of range");
      m[{std::min(i, j), std::max(i, j)}] += t.coeff;
    }
    for (auto it = m.begin(); it != m.end();)
      it = it->second == 0 ? m.erase(it) : std::next(it);
    a.push_back(std::move(m));
  }
  return a;
}

DioSystem system_from_coeffs(int r, const AnickCoeffs& a) {
  DioSystem S;
  S.num_vars = r;
  for (const auto& m : a) {
    DioEquation e;
    for (const auto& [k, c] : m) e.terms.push_back({c, {k.first, k.second}});
    S.eqs.push_back(std::move(e));
  }
  S.form = classify(S);
  return S;
}

fs::path manifest_path_for(fs::path p) {
  if (p.extension() == ".manifest") return p;
  return p.replace_extension(".manifest");
}

int cmd_homology(const std::string& in, const std::string& opath) {
  SSetPtr X = read_sset_file(in);
  auto hs = homology(*X);
  std::ostringstream out;
  for (std::size_t p = 0; p < hs.size(); ++p)
    out << "H" << p << " = " << group_text(hs[p]) << "\n";
  emit(out.str(), opath);
  return 0;
}

int cmd_cup_matrix(const std::string& in, const std::string& opath) {
  SSetPtr X = read_sset_file(in);
  CupMatrix cm = cup_matrix(*X);
  std::ostringstream out;
  out << "r " << cm.r << " s " << cm.s << "\n";
  for (std::size_t i = 0; i < cm.r; ++i)
    for (std::size_t j = 0; j < cm.r; ++j) {
      out << "entry " << i << " " << j;
      for (const auto& c : cm.entry(i, j)) out << " " << c.str();
      out << "\n";
    }
  emit(out.str(), opath);
  return 0;
}

int cmd_validate(const std::string& in) {
  SSetPtr X = read_sset_file(in);
  ValidationReport rep = validate(*X);
  if (!rep.ok()) {
    for (const auto& v : rep.violations) std::cerr << v << "\n";
    return 1;
  }
  return 0;
}

int cmd_solve(const std::string& in, int box, const std::string& opath) {
  DioSystem S = read_dio_file(in);
  auto sols = brute_force(S, box);
  std::ostringstream out;
  for (const auto& sol : sols) {
    out << "solution";
    for (const auto& v : sol) out << " " << v.str();
    out << "\n";
  }
  out << "count " << sols.size() << "\n";
  emit(out.str(), opath);
  return 0;
}

int cmd_build_anick(const std::string& coeffs_path, int r_opt, int s_opt,
                    const std::string& opath) {
  DioSystem C = read_dio_file(coeffs_path);
  if (C.paired) throw FormError("anick coefficients must be an unpaired system");
  int r = r_opt >= 0 ? r_opt : C.num_vars;
  int s = s_opt >= 0 ? s_opt : static_cast<int>(C.eqs.size());
  if (r != C.num_vars || s != static_cast<int>(C.eqs.size()))
    throw FormError("--r/--s disagree with the coefficient file");
  AnickCoeffs a = coeffs_from_system(C, r);
  AnickInstance inst = build_anick(r, s, a);

  fs::path out(opath);
  if (out.extension().empty()) out.replace_extension(".sset");
  write_sset_file(out.string(), *inst.complex);

  Manifest m;
  m.kind = "anick";
  m.d = 2;
  m.r = r;
  m.s = s;
  m.assets.push_back({"hopf", "v1"});
  m.files.push_back({"complex", out.filename().string()});
  m.sizes.push_back({"complex-cells", inst.complex->size()});
  m.system_text = dio_to_text(system_from_coeffs(r, a));
  fs::path mp = manifest_path_for(out);
  write_manifest_file(mp.string(), m);
  std::cerr << "wrote " << out.string() << " and " << mp.string() << "\n";
  return 0;
}

int cmd_build_fixed(const std::string& kind, int d, const std::string& sys_path,
                    const std::string& opath) {
  DioSystem S = read_dio_file(sys_path);
  ExtensionProblemInstance inst =
      kind == "fixed-target" ? build_fixed_target(d, S) : build_fixed_source(d, S);

  fs::path base(opath);
  base.replace_extension();
  auto part = [&](const std::string& suffix) { return base.string() + suffix; };

  write_sset_file(part("_X.sset"), *inst.X);
  write_sset_file(part("_A.sset"), *inst.A_space);
  write_sset_file(part("_Y.sset"), *inst.Y);
  SmapFile mf;
  mf.domain = fs::path(part("_A.sset")).filename().string();
  mf.codomain = fs::path(part("_Y.sset")).filename().string();
  mf.image = inst.f.image;
  write_smap_file(part("_f.smap"), mf);

  Manifest m;
  m.kind = inst.kind;
  m.d = d;
  QsymData forms = d % 2 == 0 ? qsym_data(S) : qskew_data(S);
  m.r = forms.r;
  m.s = forms.s;
  m.files.push_back({"X", fs::path(part("_X.sset")).filename().string()});
  m.files.push_back({"A", fs::path(part("_A.sset")).filename().string()});
  m.files.push_back({"Y", fs::path(part("_Y.sset")).filename().string()});
  m.files.push_back({"f", fs::path(part("_f.smap")).filename().string()});
  m.sizes.push_back({"X-cells", inst.X->size()});
  m.sizes.push_back({"A-cells", inst.A_space->size()});
  m.sizes.push_back({"Y-cells", inst.Y->size()});
  m.system_text = dio_to_text(S);
  write_manifest_file(part(".manifest"), m);
  std::cerr << "wrote " << part(".manifest") << " and its four instance files\n";
  return 0;
}

int cmd_verify_instance(const std::string& path) {
  fs::path mp = manifest_path_for(fs::path(path));
  Manifest m = read_manifest_file(mp.string());
  fs::path dir = mp.parent_path();

  auto role_path = [&](const std::string& role) -> fs::path {
    for (const auto& [ro, fn] : m.files)
      if (ro == role) return dir / fn;
    throw ParseError("manifest lacks a '" + role + "' file record");
  };

  std::vector<InstanceCheck> pre;
  auto byte_check = [&](const std::string& name, const fs::path& p,
                        const std::string& want) {
    InstanceCheck c;
    c.name = name;
    try {
      c.pass = slurp(p.string()) == want;
      if (!c.pass) c.details = "file differs from the deterministic rebuild";
    } catch (const Error& e) {
      c.pass = false;
      c.details = e.what();
    }
    pre.push_back(c);
  };

  InstanceReport rep;
  if (m.kind == "anick") {
    DioSystem C = dio_from_text(m.system_text);
    if (C.num_vars != m.r || static_cast<int>(C.eqs.size()) != m.s)
      throw FormError("manifest r/s disagree with the embedded system");
    AnickCoeffs a = coeffs_from_system(C, m.r);
    AnickInstance rebuilt = build_anick(m.r, m.s, a);
    byte_check("complex-file-bytes", role_path("complex"),
               sset_to_text(*rebuilt.complex));
    AnickInstance disk = rebuilt;
    disk.complex = read_sset_file(role_path("complex").string());
    rep = verify_instance(disk);
  } else if (m.kind == "fixed-target" || m.kind == "fixed-source") {
    DioSystem S = dio_from_text(m.system_text);
    ExtensionProblemInstance rebuilt =
        m.kind == "fixed-target" ? build_fixed_target(m.d, S)
                                 : build_fixed_source(m.d, S);
    byte_check("X-file-bytes", role_path("X"), sset_to_text(*rebuilt.X));
    byte_check("A-file-bytes", role_path("A"), sset_to_text(*rebuilt.A_space));
    byte_check("Y-file-bytes", role_path("Y"), sset_to_text(*rebuilt.Y));
    SmapFile mf;
    mf.domain = role_path("A").filename().string();
    mf.codomain = role_path("Y").filename().string();
    mf.image = rebuilt.f.image;
    byte_check("f-file-bytes", role_path("f"), smap_to_text(mf));
    rep = verify_instance(rebuilt);
  } else {
    throw ParseError("unknown manifest kind '" + m.kind + "'");
  }

  int fails = 0;
  auto show = [&](const InstanceCheck& c) {
    if (c.pass) {
      std::cout << "PASS " << c.name << "\n";
    } else {
      ++fails;
      std::cout << "FAIL " << c.name;
      if (!c.details.empty()) std::cout << " :: " << c.details;
      std::cout << "\n";
    }
  };
  for (const auto& c : pre) show(c);
  for (const auto& c : rep.checks) show(c);
  int total = static_cast<int>(pre.size() + rep.checks.size());
  std::cout << "summary " << (total - fails) << "/" << total << "\n";
  return fails == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite simplicial set calculator and extension-problem encoder"};
  app.require_subcommand(1);
  long long seed = 0;
  app.add_option("--seed", seed,
                 "seed for randomized helpers (current verbs are deterministic)");

  int rc = 0;

  // build
  auto* b = app.add_subcommand("build", "encode a system as a cell complex instance");
  b->require_subcommand(1);

  std::string an_coeffs, an_out;
  int an_r = -1, an_s = -1;
  auto* ban = b->add_subcommand("anick", "four-complex with prescribed cup matrix");
  ban->add_option("--coeffs", an_coeffs, "DIO file of quadratic coefficients")->required();
  ban->add_option("--r", an_r, "generator count (defaults to the file arity)");
  ban->add_option("--s", an_s, "relation count (defaults to the equation count)");
  ban->add_option("-o,--output", an_out, "output complex path")->required();
  ban->callback([&] { rc = cmd_build_anick(an_coeffs, an_r, an_s, an_out); });

  std::string ft_sys, ft_out, fs_sys, fs_out;
  int ft_d = 0, fs_d = 0;
  auto* bft = b->add_subcommand("fixed-target", "extension instance with sphere-wedge target");
  bft->add_option("--d", ft_d, "sphere dimension (>= 2)")->required();
  bft->add_option("system", ft_sys, "DIO system file")->required();
  bft->add_option("-o,--output", ft_out, "output base path")->required();
  bft->callback([&] { rc = cmd_build_fixed("fixed-target", ft_d, ft_sys, ft_out); });

  auto* bfs = b->add_subcommand("fixed-source", "extension instance with fixed attaching pair");
  bfs->add_option("--d", fs_d, "sphere dimension (>= 2)")->required();
  bfs->add_option("system", fs_sys, "DIO system file")->required();
  bfs->add_option("-o,--output", fs_out, "output base path")->required();
  bfs->callback([&] { rc = cmd_build_fixed("fixed-source", fs_d, fs_sys, fs_out); });

  // reduce
  std::string rd_to, rd_in, rd_out;
  auto* rd = app.add_subcommand("reduce", "rewrite a system in a more special form");
  rd->add_option("--to", rd_to, "quadratic, qsym, or qskew")
      ->required()
      ->check(CLI::IsMember({"quadratic", "qsym", "qskew"}));
  rd->add_option("system", rd_in, "DIO system file")->required();
  rd->add_option("-o,--output", rd_out, "output DIO path")->required();
  rd->callback([&] {
    DioSystem R = reduce_to(read_dio_file(rd_in), rd_to);
    write_dio_file(rd_out, R);
  });

  // solve
  std::string sv_in, sv_out;
  int sv_box = 0;
  auto* sv = app.add_subcommand("solve", "enumerate box-bounded solutions");
  sv->add_option("--box", sv_box, "coordinate bound B, search [-B, B]")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sv->add_option("system", sv_in, "DIO system file")->required();
  sv->add_option("-o,--output", sv_out, "write the solution list here");
  sv->callback([&] { rc = cmd_solve(sv_in, sv_box, sv_out); });

  // homology / cup-matrix / validate
  std::string hm_in, hm_out;
  auto* hm = app.add_subcommand("homology", "print integral homology by degree");
  hm->add_option("space", hm_in, "SSET file")->required();
  hm->add_option("-o,--output", hm_out, "write the table here");
  hm->callback([&] { rc = cmd_homology(hm_in, hm_out); });

  std::string cm_in, cm_out;
  auto* cm = app.add_subcommand("cup-matrix", "print the degree-2 cup pairing");
  cm->add_option("space", cm_in, "SSET file")->required();
  cm->add_option("-o,--output", cm_out, "write the matrix here");
  cm->callback([&] { rc = cmd_cup_matrix(cm_in, cm_out); });

  std::string vl_in;
  auto* vl = app.add_subcommand("validate", "check the simplicial identities");
  vl->add_option("space", vl_in, "SSET file")->required();
  vl->callback([&] { rc = cmd_validate(vl_in); });

  // hopf / degree
  std::string hp_in, hp_out;
  auto* hp = app.add_subcommand("hopf", "cup-square invariant of a sphere map");
  hp->add_option("map", hp_in, "SMAP file")->required();
  hp->add_option("-o,--output", hp_out, "write the value here");
  hp->callback([&] {
    SimplicialMap f = load_bound_map(hp_in);
    emit(hopf_invariant(f).str() + "\n", hp_out);
  });

  std::string dg_in, dg_out;
  int dg_d = -1;
  auto* dg = app.add_subcommand("degree", "mapping degree on top homology");
  dg->add_option("map", dg_in, "SMAP file")->required();
  dg->add_option("--d", dg_d, "degree to measure in (defaults to the domain dimension)");
  dg->add_option("-o,--output", dg_out, "write the value here");
  dg->callback([&] {
    SimplicialMap f = load_bound_map(dg_in);
    int p = dg_d >= 0 ? dg_d : f.dom->dimension();
    emit(mapping_degree(f, p).str() + "\n", dg_out);
  });

  // space constructors
  std::string sd_in, sd_out;
  auto* sdc = app.add_subcommand("sd", "normal subdivision");
  sdc->add_option("space", sd_in, "SSET file")->required();
  sdc->add_option("-o,--output", sd_out, "output SSET path")->required();
  sdc->callback([&] { write_sset_file(sd_out, *sd(read_sset_file(sd_in)).space); });

  std::string bs_in, bs_out;
  auto* bsc = app.add_subcommand("bsd", "twofold subdivision (always a complex)");
  bsc->add_option("space", bs_in, "SSET file")->required();
  bsc->add_option("-o,--output", bs_out, "output SSET path")->required();
  bsc->callback([&] { write_sset_file(bs_out, *bsd(read_sset_file(bs_in)).space); });

  std::vector<std::string> pr_in;
  std::string pr_out;
  auto* pr = app.add_subcommand("product", "cartesian product of two spaces");
  pr->add_option("spaces", pr_in, "two SSET files")->expected(2);
  pr->add_option("-o,--output", pr_out, "output SSET path")->required();
  pr->callback([&] {
    auto P = product(read_sset_file(pr_in[0]), read_sset_file(pr_in[1]));
    write_sset_file(pr_out, *P.space);
  });

  std::vector<std::string> wg_in;
  std::string wg_out;
  auto* wg = app.add_subcommand("wedge", "one-point union of pointed spaces");
  wg->add_option("spaces", wg_in, "SSET files")->required();
  wg->add_option("-o,--output", wg_out, "output SSET path")->required();
  wg->callback([&] {
    std::vector<SSetPtr> xs;
    for (const auto& p : wg_in) xs.push_back(read_sset_file(p));
    write_sset_file(wg_out, *wedge(xs).space);
  });

  std::string cn_in, cn_out, cy_in, cy_out;
  bool cn_reduced = false, cy_reduced = false;
  auto* cn = app.add_subcommand("cone", "mapping cone");
  cn->add_option("map", cn_in, "SMAP file")->required();
  cn->add_flag("--reduced", cn_reduced, "collapse the basepoint segment");
  cn->add_option("-o,--output", cn_out, "output SSET path")->required();
  cn->callback([&] {
    write_sset_file(cn_out, *cone(load_bound_map(cn_in), cn_reduced).space);
  });

  auto* cy = app.add_subcommand("cylinder", "mapping cylinder");
  cy->add_option("map", cy_in, "SMAP file")->required();
  cy->add_flag("--reduced", cy_reduced, "collapse the basepoint segment");
  cy->add_option("-o,--output", cy_out, "output SSET path")->required();
  cy->callback([&] {
    write_sset_file(cy_out, *cylinder(load_bound_map(cy_in), cy_reduced).space);
  });

  // verify
  std::string vi_in;
  auto* vf = app.add_subcommand("verify", "run the verification oracles");
  vf->require_subcommand(1);
  auto* vfi = vf->add_subcommand("instance", "re-derive and check a built instance");
  vfi->add_option("input", vi_in, "manifest path, or any file next to it")->required();
  vfi->callback([&] { rc = cmd_verify_instance(vi_in); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
