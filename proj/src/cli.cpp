#include "charvar/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "charvar/cache.hpp"
#include "charvar/fq.hpp"
#include "charvar/macdonald.hpp"

namespace charvar::cli {

namespace {

// What a verb hands back: the JSON document plus optional CSV and pretty
// renderings.
struct Output {
  Json doc = Json::object();
  std::string csv_header;
  std::vector<std::string> csv_rows;
  std::vector<std::string> pretty;
};

class CheckFailed : public std::runtime_error {
 public:
  CheckFailed(Json doc) : std::runtime_error("check failed"), doc(std::move(doc)) {}
  Json doc;
};

Json read_json_arg(const std::string& text, const char* flag) {
  std::string body = text;
  if (!body.empty() && body[0] == '@') {
    std::ifstream in(body.substr(1));
    if (!in) throw ValidationError(std::string("cannot read ") + flag + " file " + body.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string(flag) + " is not valid JSON: " + e.what());
  }
}

void check_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw ValidationError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ValidationError("unknown key \"" + key + "\" in " + where);
  }
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ValidationError(what + " must be an integer");
  return j.get<int>();
}

// Polynomial JSON with the re-parse round trip every emitted polynomial goes through.
Json emit(const UniPoly& p) {
  Json j = to_json(p);
  if (unipoly_from_json(Json::parse(j.dump())) != p) throw MathError("polynomial JSON round trip failed");
  return j;
}

// [[e_q, e_v, coeff], ...] for the mixed-Hodge polynomial.
Json emit_qv(const ZWPoly& p) {
  Json j = Json::array();
  for (const auto& [e, c] : p.terms()) j.push_back({e.z, e.w, bigrat_to_json(c)});
  std::vector<ZWPoly::Term> back;
  for (const auto& t : Json::parse(j.dump()))
    back.emplace_back(Exponent{t[0].get<std::uint32_t>(), t[1].get<std::uint32_t>()}, bigrat_from_json(t[2]));
  if (ZWPoly::from_terms(back) != p) throw MathError("polynomial JSON round trip failed");
  return j;
}

void csv_poly(Output& o, const UniPoly& p) {
  o.csv_header = "exponent,coefficient";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i] != 0) o.csv_rows.push_back(std::to_string(i) + "," + to_string(p.coeffs()[i]));
}

// z², w² exponents back to q, t.
ZWPoly halve(const ZWPoly& p) {
  std::vector<ZWPoly::Term> terms;
  for (const auto& [e, c] : p.terms()) {
    if (e.z % 2 || e.w % 2) throw MathError("Macdonald coefficient is not a polynomial in q, t");
    terms.emplace_back(Exponent{e.z / 2, e.w / 2}, c);
  }
  return ZWPoly::from_terms(std::move(terms));
}

Partition parse_partition_arg(const std::string& text) {
  Json j;
  if (text.find('[') != std::string::npos) {
    j = read_json_arg(text, "--partition");
  } else {
    j = Json::array();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        j.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw ValidationError("--partition must be a list of integers");
      }
    }
  }
  return partition_from_json(j);
}

std::vector<long> parse_long_list(const std::string& text, const char* flag) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError(std::string(flag) + " must be a comma-separated list of integers");
    }
  }
  return out;
}

// Every Jordan datum of rank n at one puncture.
std::vector<MultiPartition> puncture_types(int n) {
  std::vector<MultiPartition> out;
  for (const auto& nu : partitions_of(n)) {
    std::vector<MultiPartition> acc{MultiPartition{}};
    for (int part : nu.parts()) {
      std::vector<MultiPartition> next;
      for (const auto& a : acc)
        for (const auto& mu : partitions_of(part)) {
          MultiPartition b = a;
          b.components.push_back(mu);
          next.push_back(std::move(b));
        }
      acc = std::move(next);
    }
    out.insert(out.end(), acc.begin(), acc.end());
  }
  return out;
}

Json surface_header(const SurfaceData& s) {
  return {{"n", s.rank()}, {"genus", s.genus}, {"k", s.k()}, {"dim", dim_charvar(s)}, {"generic", true}};
}

EtaIndex parse_eta(const Json& j) {
  if (!j.is_array()) throw ValidationError("--eta must be nested arrays [puncture][eigenvalue][slot]");
  EtaIndex eta;
  for (const auto& p : j) {
    if (!p.is_array()) throw ValidationError("--eta must be nested arrays [puncture][eigenvalue][slot]");
    std::vector<std::vector<Partition>> row;
    for (const auto& e : p) {
      if (!e.is_array()) throw ValidationError("--eta must be nested arrays [puncture][eigenvalue][slot]");
      std::vector<Partition> slots;
      for (const auto& s : e) slots.push_back(partition_from_json(s));
      row.push_back(std::move(slots));
    }
    eta.push_back(std::move(row));
  }
  return eta;
}

fq::FqClassSpec parse_class(const Json& j, long q) {
  if (!j.is_array()) throw ValidationError("each class must be an array of eigenvalues");
  fq::FqClassSpec spec;
  for (const auto& e : j) {
    check_keys(e, {"value", "mult", "jordan"}, "class eigenvalue");
    fq::FqEigen ev;
    const Json& v = e.at("value");
    if (v.is_number_integer()) {
      ev.value = {((v.get<long>() % q) + q) % q, 0};
    } else if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
      ev.value = {((v[0].get<long>() % q) + q) % q, ((v[1].get<long>() % q) + q) % q};
    } else {
      throw ValidationError("eigenvalue value must be an integer or [a, b] for a + b*sqrt(nonresidue)");
    }
    ev.mult = e.contains("mult") ? as_int(e.at("mult"), "mult") : 1;
    ev.jordan = e.contains("jordan") ? partition_from_json(e.at("jordan")) : Partition::column(ev.mult);
    spec.eigenvalues.push_back(std::move(ev));
  }
  return spec;
}

// ---- verbs ---------------------------------------------------------------------

struct SurfaceFlags {
  int genus = -1;
  int rank = -1;
  std::string punctures;
};

SurfaceData surface_from(const SurfaceFlags& f) {
  if (f.punctures.empty()) throw ValidationError("--punctures is required");
  return parse_surface(read_json_arg(f.punctures, "--punctures"), f.genus, f.rank);
}

Output verb_poincare(const SurfaceFlags& f) {
  SurfaceData s = surface_from(f);
  UniPoly p = poincare_ih(s);
  Output o;
  o.doc = surface_header(s);
  o.doc["poincare"] = emit(p);
  csv_poly(o, p);
  o.pretty.push_back("P_ih(v) = " + p.to_string("v"));
  return o;
}

Output verb_poincare_ss(int genus, const std::string& nus_text) {
  if (genus < 0) throw ValidationError("--genus is required");
  if (nus_text.empty()) throw ValidationError("--nus is required");
  Json j = read_json_arg(nus_text, "--nus");
  if (!j.is_array() || j.empty()) throw ValidationError("--nus must be a nonempty array of partitions");
  std::vector<Partition> nus;
  for (const auto& x : j) nus.push_back(partition_from_json(x));
  UniPoly p = poincare_ss(genus, nus);
  Output o;
  o.doc = {{"genus", genus}, {"k", nus.size()}, {"n", nus[0].size()}, {"poincare", emit(p)}};
  csv_poly(o, p);
  o.pretty.push_back("P(v) = " + p.to_string("v"));
  return o;
}

Output verb_twisted(const SurfaceFlags& f, const std::string& eta_text) {
  SurfaceData s = surface_from(f);
  EtaIndex eta = eta_text.empty() ? trivial_eta(s) : parse_eta(read_json_arg(eta_text, "--eta"));
  UniPoly p = twisted_poincare(s, eta);
  Output o;
  o.doc = surface_header(s);
  o.doc["r"] = eta_r(s, eta);
  o.doc["twisted"] = emit(p);
  csv_poly(o, p);
  o.pretty.push_back("twisted P(v) = " + p.to_string("v"));
  return o;
}

Output verb_epoly(const SurfaceFlags& f) {
  SurfaceData s = surface_from(f);
  UniPoly p = e_polynomial(s);
  Output o;
  o.doc = surface_header(s);
  o.doc["e_polynomial"] = emit(p);
  csv_poly(o, p);
  o.pretty.push_back("E(q) = " + p.to_string("q"));
  return o;
}

Output verb_mixed_hodge(const SurfaceFlags& f) {
  SurfaceData s = surface_from(f);
  MixedHodge mh = mixed_hodge_conjectural(s);
  Output o;
  o.doc = surface_header(s);
  o.doc["mixed_hodge"] = emit_qv(mh.poly);
  o.doc["conjectural"] = mh.conjectural;
  o.csv_header = "q_exponent,v_exponent,coefficient";
  for (const auto& [e, c] : mh.poly.terms())
    o.csv_rows.push_back(std::to_string(e.z) + "," + std::to_string(e.w) + "," + to_string(c));
  o.pretty.push_back("IH(q, v) = " + mh.poly.to_string("q", "v") + "   [conjectural]");
  return o;
}

Output verb_kernel(int n, int g, int k, const std::string& probe_text) {
  if (n < 0 || g < 0 || k < 1) throw ValidationError("--rank, --genus and --punctures (count) are required");
  KernelResult kr = hlv_kernel(n, g, k);
  Output o;
  o.doc = {{"n", n}, {"genus", g}, {"k", k}};
  if (probe_text.empty()) {
    o.doc["kernel"] = to_json(kr.kernel);
    o.pretty.push_back(std::to_string(kr.kernel.terms().size()) + " power-sum terms");
    return o;
  }
  Json j = read_json_arg(probe_text, "--probe");
  if (!j.is_array() || static_cast<int>(j.size()) != k)
    throw ValidationError("--probe must list one partition per puncture");
  std::vector<SymFunc1> per;
  for (const auto& x : j) per.push_back(SymFunc1::element(Basis::s, partition_from_json(x), std::max(8, n)));
  MultiSymFunc probe = MultiSymFunc::tensor(per);
  FieldElem pairing = pair_multi(probe, kr.kernel);
  UniRat at = specialize_pair_rational(kr, probe, UniPoly(-1), UniPoly::x());
  o.doc["probe"] = j;
  o.doc["pairing"] = to_json(pairing);
  if (at.is_polynomial()) {
    o.doc["at_z_minus_one"] = emit(at.num());
    csv_poly(o, at.num());
  } else {
    o.doc["at_z_minus_one"] = {{"num", emit(at.num())}, {"den", emit(at.den())}};
  }
  o.pretty.push_back("<probe, kernel> = " + pairing.to_string());
  o.pretty.push_back("at z = -1, w = v: " + at.to_string("v"));
  return o;
}

Output verb_macdonald(const std::string& part_text, const std::string& method) {
  if (part_text.empty()) throw ValidationError("--partition is required");
  Partition lam = parse_partition_arg(part_text);
  SymFunc1 h = method == "fillings" ? htilde_oracle(lam) : htilde(lam);
  Output o;
  o.csv_header = "partition,coefficient";
  for (const auto& [mu, c] : h.terms()) {
    if (!c.is_polynomial()) throw MathError("Macdonald coefficient is not a polynomial");
    std::string coeff = halve(c.num()).to_string("q", "t");
    o.doc["s" + mu.to_string()] = coeff;
    o.csv_rows.push_back("\"" + mu.to_string() + "\"," + coeff);
  }
  for (auto it = h.terms().rbegin(); it != h.terms().rend(); ++it)
    o.pretty.push_back("s" + it->first.to_string() + " : " + halve(it->second.num()).to_string("q", "t"));
  return o;
}

Output verb_count_points(int g, const std::string& q_text, const std::string& classes_text,
                         const std::string& nus_text) {
  if (g < 0) throw ValidationError("--genus is required");
  if (q_text.empty()) throw ValidationError("--q is required");
  if (classes_text.empty() == nus_text.empty()) throw ValidationError("give exactly one of --classes and --nus");
  std::vector<long> qs = parse_long_list(q_text, "--q");
  Output o;
  o.csv_header = "q,count";
  Json counts = Json::array();
  std::vector<std::pair<BigInt, BigInt>> points;
  for (long q : qs) {
    fq::PrimeField F(q);
    std::vector<fq::FqClassSpec> specs;
    if (!classes_text.empty()) {
      Json j = read_json_arg(classes_text, "--classes");
      if (!j.is_array()) throw ValidationError("--classes must be an array of classes");
      for (const auto& c : j) specs.push_back(parse_class(c, q));
    } else {
      Json j = read_json_arg(nus_text, "--nus");
      if (!j.is_array()) throw ValidationError("--nus must be an array of partitions");
      std::vector<Partition> nus;
      for (const auto& x : j) nus.push_back(partition_from_json(x));
      auto found = fq::find_generic_semisimple(F, nus);
      if (!found) throw ValidationError("no generic split semisimple data over F_" + std::to_string(q));
      specs = *found;
    }
    BigInt c = fq::count_points(g, q, specs);
    counts.push_back({{"q", q}, {"count", bigrat_to_json(BigRat(c))}});
    o.csv_rows.push_back(std::to_string(q) + "," + c.get_str());
    o.pretty.push_back("q = " + std::to_string(q) + ": " + c.get_str());
    points.emplace_back(q, c);
  }
  if (qs.size() == 1) {
    o.doc = counts[0];
  } else {
    o.doc["counts"] = counts;
    UniPoly e = fq::lagrange(points);
    o.doc["interpolated_E"] = emit(e);
    o.pretty.push_back("interpolated E(q) = " + e.to_string("q"));
  }
  return o;
}

Output verb_fricke(const std::string& q_text, const std::string& traces_text) {
  if (q_text.empty() || traces_text.empty()) throw ValidationError("--q and --traces are required");
  std::vector<long> qs = parse_long_list(q_text, "--q");
  std::vector<long> t = parse_long_list(traces_text, "--traces");
  if (t.size() != 4) throw ValidationError("--traces takes tr X1, tr X2, tr X3, tr X1X2X3");
  Output o;
  o.csv_header = "q,count";
  Json counts = Json::array();
  for (long q : qs) {
    BigInt c = fq::fricke_count(q, t[0], t[1], t[2], t[3]);
    counts.push_back({{"q", q}, {"count", bigrat_to_json(BigRat(c))}, {"traces", t}});
    o.csv_rows.push_back(std::to_string(q) + "," + c.get_str());
    o.pretty.push_back("q = " + std::to_string(q) + ": " + c.get_str());
  }
  o.doc = qs.size() == 1 ? counts[0] : Json{{"counts", counts}};
  return o;
}

Output verb_check_identities(int max_rank, int g, int k) {
  if (max_rank < 1 || g < 0 || k < 1)
    throw ValidationError("--max-rank, --genus and --punctures (count) are required");
  std::size_t cases = 0;
  Json failures = Json::array();
  bool resolution = true, mixed = true, twisted = true, shape = true;
  for (int n = 1; n <= max_rank; ++n) {
    std::vector<std::vector<MultiPartition>> data{{}};
    for (int j = 0; j < k; ++j) {
      std::vector<std::vector<MultiPartition>> next;
      for (const auto& a : data)
        for (const auto& t : puncture_types(n)) {
          auto b = a;
          b.push_back(t);
          next.push_back(std::move(b));
        }
      data = std::move(next);
    }
    for (const auto& jd : data) {
      ++cases;
      SurfaceData s = auto_surface(g, jd);
      std::string label;
      for (const auto& m : jd) label += m.to_string();
      auto fail = [&](bool& flag, const char* what, const std::string& detail) {
        flag = false;
        failures.push_back({{"check", what}, {"n", n}, {"jordan", label}, {"detail", detail}});
      };
      auto rep = resolution_identity_check(s);
      if (!rep.ok) fail(resolution, "resolution_identity", rep.diff);
      UniPoly p = poincare_ih(s);
      MixedHodge mh = mixed_hodge_conjectural(s);
      std::vector<BigRat> at_one;
      for (const auto& [e, c] : mh.poly.terms()) {
        if (at_one.size() <= e.w) at_one.resize(e.w + 1);
        at_one[e.w] += c;
      }
      if (UniPoly(at_one) != p) fail(mixed, "mixed_hodge_q1", p.to_string());
      if (twisted_poincare(s, trivial_eta(s)) != poincare_h_probe(s))
        fail(twisted, "twisted_trivial", p.to_string());
      if (p != UniPoly()) {
        bool ok = p.degree() == 2 * dim_charvar(s) && p.coeffs().back() == 1;
        for (const auto& c : p.coeffs()) ok = ok && c >= 0 && c.get_den() == 1;
        if (!ok) fail(shape, "poincare_shape", p.to_string());
      }
    }
  }
  auto word = [](bool b) { return b ? "pass" : "fail"; };
  Output o;
  o.doc = {{"cases", cases},
           {"genus", g},
           {"k", k},
           {"max_rank", max_rank},
           {"resolution_identity", word(resolution)},
           {"mixed_hodge_q1", word(mixed)},
           {"twisted_trivial", word(twisted)},
           {"poincare_shape", word(shape)}};
  if (!failures.empty()) o.doc["failures"] = failures;
  for (const char* key : {"resolution_identity", "mixed_hodge_q1", "twisted_trivial", "poincare_shape"})
    o.pretty.push_back(std::string(key) + ": " + o.doc[key].get<std::string>());
  if (!failures.empty()) throw CheckFailed(o.doc);
  return o;
}

Json cache_status_doc(const DiskCache& cache) {
  CacheStatus st = cache.status();
  Json keys = Json::array();
  for (const auto& [n, g, k] : st.kernel_keys) keys.push_back({n, g, k});
  auto file = [](const CacheFileStatus& f) {
    return Json{{"present", f.present}, {"entries", f.entries}, {"bytes", f.bytes}};
  };
  Json ker = file(st.kernel);
  ker["keys"] = keys;
  return {{"dir", st.dir.string()},
          {"version", kCacheFormatVersion},
          {"macdonald", file(st.macdonald)},
          {"kernel", ker}};
}

void render(const Output& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << dump_canonical(o.doc) << '\n';
  } else if (format == "pretty") {
    if (o.pretty.empty()) {
      out << o.doc.dump(2) << '\n';
    } else {
      for (const auto& line : o.pretty) out << line << '\n';
    }
  } else {
    if (o.csv_header.empty()) throw ValidationError("csv output is not available for this command");
    out << o.csv_header << '\n';
    for (const auto& row : o.csv_rows) out << row << '\n';
  }
}

Json error_doc(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

// ---- surface input -----------------------------------------------------------

SurfaceData parse_surface(const Json& input, int genus, int rank) {
  Json punct = input;
  if (input.is_object()) {
    check_keys(input, {"genus", "punctures"}, "surface document");
    if (!input.contains("punctures")) throw ValidationError("surface document needs \"punctures\"");
    punct = input.at("punctures");
    if (input.contains("genus")) {
      int g = as_int(input.at("genus"), "genus");
      if (genus >= 0 && genus != g) throw ValidationError("--genus disagrees with the document");
      genus = g;
    }
  }
  if (genus < 0) throw ValidationError("genus is required (--genus or \"genus\")");
  if (!punct.is_array() || punct.empty()) throw ValidationError("punctures must be a nonempty array");

  std::size_t autos = 0;
  for (const auto& p : punct) {
    if (!p.is_object()) throw ValidationError("each puncture must be an object");
    if (p.value("auto", false)) ++autos;
  }
  if (autos != 0 && autos != punct.size())
    throw ValidationError("auto and explicit punctures cannot be mixed");

  if (autos) {
    std::vector<MultiPartition> jordan;
    for (const auto& p : punct) {
      check_keys(p, {"auto", "jordan", "nu"}, "auto puncture");
      if (p.contains("jordan") && p.contains("nu")) throw ValidationError("give \"jordan\" or \"nu\", not both");
      MultiPartition m;
      if (p.contains("jordan")) {
        if (!p.at("jordan").is_array()) throw ValidationError("\"jordan\" must list one partition per eigenvalue");
        for (const auto& x : p.at("jordan")) m.components.push_back(partition_from_json(x));
      } else if (p.contains("nu")) {
        for (int part : partition_from_json(p.at("nu")).parts()) m.components.push_back(Partition::column(part));
      } else {
        if (rank < 1) throw ValidationError("--rank is required for auto punctures without \"jordan\" or \"nu\"");
        m.components.assign(rank, Partition{1});
      }
      if (m.components.empty()) throw ValidationError("a puncture needs at least one eigenvalue");
      jordan.push_back(std::move(m));
    }
    SurfaceData s = auto_surface(genus, jordan);
    if (rank >= 1 && s.rank() != rank) throw ValidationError("--rank disagrees with the puncture data");
    return s;
  }

  SurfaceData s;
  s.genus = genus;
  for (const auto& p : punct) {
    check_keys(p, {"eigenvalues"}, "puncture");
    if (!p.contains("eigenvalues") || !p.at("eigenvalues").is_array())
      throw ValidationError("puncture needs an \"eigenvalues\" array");
    PunctureData pd;
    for (const auto& e : p.at("eigenvalues")) {
      check_keys(e, {"torsion", "free", "mult", "jordan"}, "eigenvalue");
      Eigenvalue ev;
      BigRat torsion = e.contains("torsion") ? bigrat_from_json(e.at("torsion")) : BigRat(0);
      std::vector<long> free;
      if (e.contains("free")) {
        if (!e.at("free").is_array()) throw ValidationError("\"free\" must be an array of integers");
        for (const auto& x : e.at("free")) free.push_back(as_int(x, "free exponent"));
      }
      ev.value = EigenvalueSpec(torsion, free);
      ev.mult = e.contains("mult") ? as_int(e.at("mult"), "mult") : 1;
      ev.jordan = e.contains("jordan") ? partition_from_json(e.at("jordan")) : Partition::column(ev.mult);
      pd.eigenvalues.push_back(std::move(ev));
    }
    s.punctures.push_back(std::move(pd));
  }
  s.validate();
  if (rank >= 1 && s.rank() != rank) throw ValidationError("--rank disagrees with the puncture data");
  if (!is_generic(s)) throw ValidationError("eigenvalue data is not generic");
  return s;
}

// ---- entry point -----------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology of character varieties of punctured surfaces", "charvar"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  app.add_option("--format", format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--cache-dir", cache_dir, "cache directory (default $CHARVAR_CACHE_DIR)");
  app.add_flag("--no-cache", no_cache, "neither read nor write the disk cache");

  SurfaceFlags sf;
  auto surface_opts = [&](CLI::App* sub) {
    sub->add_option("--genus", sf.genus, "genus of the surface");
    sub->add_option("--rank", sf.rank, "rank n, for auto punctures");
    sub->add_option("--punctures", sf.punctures, "JSON puncture list or @file");
  };
  auto* poincare = app.add_subcommand("poincare", "intersection Poincare polynomial");
  surface_opts(poincare);
  auto* epoly = app.add_subcommand("epoly", "E-polynomial");
  surface_opts(epoly);
  auto* mixed = app.add_subcommand("mixed-hodge", "conjectural mixed-Hodge polynomial");
  surface_opts(mixed);
  std::string eta;
  auto* twisted = app.add_subcommand("twisted", "twisted Poincare polynomial");
  surface_opts(twisted);
  twisted->add_option("--eta", eta, "JSON [puncture][eigenvalue][slot] partitions");

  int genus = -1, rank = -1, count = -1, max_rank = -1;
  std::string nus, probe, partition, method = "triangular", q, classes, traces;
  auto* ss = app.add_subcommand("poincare-ss", "Poincare polynomial, semisimple classes");
  ss->add_option("--genus", genus);
  ss->add_option("--nus", nus, "JSON list of multiplicity partitions, one per puncture");
  auto* kernel = app.add_subcommand("kernel", "the generating kernel or a pairing with it");
  kernel->add_option("--rank", rank);
  kernel->add_option("--genus", genus);
  kernel->add_option("--punctures", count, "number of punctures");
  kernel->add_option("--probe", probe, "JSON list of partitions, a Schur probe");
  auto* mac = app.add_subcommand("macdonald", "modified Macdonald polynomial in the Schur basis");
  mac->add_option("--partition", partition, "e.g. 2,1 or [2,1]");
  mac->add_option("--method", method)->check(CLI::IsMember({"triangular", "fillings"}));
  auto* cp = app.add_subcommand("count-points", "brute-force point count over F_q");
  cp->add_option("--genus", genus);
  cp->add_option("--q", q, "prime, or comma-separated primes");
  cp->add_option("--classes", classes, "JSON classes: [[{\"value\":a,\"mult\":m,\"jordan\":[...]}...]...]");
  cp->add_option("--nus", nus, "JSON multiplicities; generic split eigenvalues are searched");
  auto* fr = app.add_subcommand("fricke-count", "points of the Fricke cubic over F_q");
  fr->add_option("--q", q);
  fr->add_option("--traces", traces, "tr X1,tr X2,tr X3,tr X1X2X3");
  auto* ci = app.add_subcommand("check-identities", "exhaustive identity checks");
  ci->add_option("--max-rank", max_rank);
  ci->add_option("--genus", genus);
  ci->add_option("--punctures", count, "number of punctures");
  auto* cache = app.add_subcommand("cache", "cache administration");
  cache->require_subcommand(1);
  cache->fallthrough();
  auto* c_status = cache->add_subcommand("status");
  auto* c_clear = cache->add_subcommand("clear");
  auto* c_warm = cache->add_subcommand("warm");
  c_warm->add_option("--rank", rank)->required();
  c_warm->add_option("--genus", genus)->required();
  c_warm->add_option("--punctures", count, "number of punctures")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "charvar: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  auto fail = [&](const std::string& kind, const std::string& msg) {
    out << dump_canonical(error_doc(kind, msg)) << '\n';
  };
  try {
    DiskCache disk(cache_dir.empty() ? DiskCache::default_dir() : std::filesystem::path(cache_dir));
    if (cache->parsed()) {
      Output o;
      if (c_status->parsed()) {
        o.doc = cache_status_doc(disk);
      } else if (c_clear->parsed()) {
        disk.clear();
        o.doc = cache_status_doc(disk);
      } else if (c_warm->parsed()) {
        if (rank < 1 || genus < 0 || count < 1) throw ValidationError("warm needs --rank >= 1, --genus >= 0, --punctures >= 1");
        disk.warm(rank, genus, count);
        o.doc = cache_status_doc(disk);
      }
      render(o, format == "csv" ? "json" : format, out);
      return kExitOk;
    }

    bool tables = !cp->parsed() && !fr->parsed();
    if (tables && !no_cache) disk.load();
    Output o;
    if (poincare->parsed()) o = verb_poincare(sf);
    else if (epoly->parsed()) o = verb_epoly(sf);
    else if (mixed->parsed()) o = verb_mixed_hodge(sf);
    else if (twisted->parsed()) o = verb_twisted(sf, eta);
    else if (ss->parsed()) o = verb_poincare_ss(genus, nus);
    else if (kernel->parsed()) o = verb_kernel(rank, genus, count, probe);
    else if (mac->parsed()) o = verb_macdonald(partition, method);
    else if (cp->parsed()) o = verb_count_points(genus, q, classes, nus);
    else if (fr->parsed()) o = verb_fricke(q, traces);
    else if (ci->parsed()) o = verb_check_identities(max_rank, genus, count);
    if (tables && !no_cache) disk.save();
    render(o, format, out);
    return kExitOk;
  } catch (const CheckFailed& e) {
    out << dump_canonical(e.doc) << '\n';
    return kExitInternal;
  } catch (const ValidationError& e) {
    fail("validation", e.what());
    return kExitInvalid;
  } catch (const CacheVersionError& e) {
    fail("cache", e.what());
    return kExitInvalid;
  } catch (const SizingError& e) {
    fail("sizing", e.what());
    return kExitInvalid;
  } catch (const Json::exception& e) {
    fail("validation", std::string("malformed JSON input: ") + e.what());
    return kExitInvalid;
  } catch (const std::exception& e) {
    fail("internal", e.what());
    return kExitInternal;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"charvar"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace charvar::cli
