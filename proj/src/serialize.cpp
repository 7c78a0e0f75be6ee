#include "charvar/serialize.hpp"

namespace charvar {

namespace {

std::uint32_t exponent_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ValidationError("exponent must be a nonnegative integer");
  return j.get<std::uint32_t>();
}

BigInt bigint_from_string(const Json& j) {
  if (!j.is_string()) throw ValidationError("expected a decimal string");
  return parse_bigint(j.get<std::string>());
}

}  // namespace

Json bigrat_to_json(const BigRat& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return to_string(x);
}

BigRat bigrat_from_json(const Json& j) {
  if (j.is_number_integer()) return BigRat(j.get<long>());
  if (j.is_string()) return parse_bigrat(j.get<std::string>());
  throw ValidationError("expected an integer or a \"num/den\" string");
}

Json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("partition must be an array of integers");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ValidationError("partition must be an array of integers");
    parts.push_back(x.get<int>());
  }
  return Partition(std::move(parts));
}

Json to_json(const ZWPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back({e.z, e.w, c.get_num().get_str(), c.get_den().get_str()});
  return out;
}

ZWPoly zwpoly_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("polynomial must be an array of quadruples");
  std::vector<ZWPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 4) throw ValidationError("polynomial term must be [e_z, e_w, num, den]");
    BigRat c(bigint_from_string(t[2]), bigint_from_string(t[3]));
    if (c.get_den() == 0) throw ValidationError("zero denominator in polynomial term");
    c.canonicalize();
    terms.emplace_back(Exponent{exponent_from_json(t[0]), exponent_from_json(t[1])}, c);
  }
  return ZWPoly::from_terms(std::move(terms));
}

Json to_json(const FieldElem& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

FieldElem field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ValidationError("field element must be {\"num\", \"den\"}");
  return FieldElem(zwpoly_from_json(j.at("num")), zwpoly_from_json(j.at("den")));
}

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i] != 0) out.push_back({i, bigrat_to_json(p.coeffs()[i])});
  return out;
}

UniPoly unipoly_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("polynomial must be an array of [exp, coeff] pairs");
  UniPoly out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw ValidationError("polynomial term must be [exp, coeff]");
    out += UniPoly::monomial(bigrat_from_json(t[1]), exponent_from_json(t[0]));
  }
  return out;
}

Json to_json(const SymFunc1& f) {
  Json terms = Json::array();
  for (const auto& [lam, c] : f.terms()) terms.push_back({to_json(lam), to_json(c)});
  return {{"basis", std::string(1, basis_letter(f.basis()))},
          {"bound", f.degree_bound()},
          {"terms", terms}};
}

SymFunc1 symfunc_from_json(const Json& j) {
  SymFunc1 out(basis_from_letter(j.at("basis").get<std::string>()), j.at("bound").get<int>());
  for (const auto& t : j.at("terms")) out.add_term(partition_from_json(t.at(0)), field_from_json(t.at(1)));
  return out;
}

Json to_json(const MultiSymFunc& f) {
  Json terms = Json::array();
  for (const auto& [key, c] : f.terms()) {
    Json k = Json::array();
    for (const auto& p : key) k.push_back(to_json(p));
    terms.push_back({k, to_json(c)});
  }
  return {{"k", f.k()}, {"terms", terms}};
}

MultiSymFunc multisymfunc_from_json(const Json& j) {
  MultiSymFunc out(j.at("k").get<int>());
  for (const auto& t : j.at("terms")) {
    MultiKey key;
    for (const auto& p : t.at(0)) key.push_back(partition_from_json(p));
    out.add_term(key, field_from_json(t.at(1)));
  }
  return out;
}

Json to_json(const KernelResult& kr) {
  return {{"n", kr.n}, {"g", kr.g}, {"k", kr.k}, {"kernel", to_json(kr.kernel)}};
}

KernelResult kernel_from_json(const Json& j) {
  KernelResult kr;
  kr.n = j.at("n").get<int>();
  kr.g = j.at("g").get<int>();
  kr.k = j.at("k").get<int>();
  kr.kernel = multisymfunc_from_json(j.at("kernel"));
  return kr;
}

std::string dump_canonical(const Json& j) { return j.dump(); }

}  // namespace charvar
