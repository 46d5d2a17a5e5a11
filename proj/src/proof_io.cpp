#include "emtrans/proof_io.hpp"

#include <algorithm>

namespace emtrans {

namespace {

Json ante_json(const Multiset& ms) {
  std::vector<std::string> parts;
  parts.reserve(ms.size());
  for (const auto& f : ms) parts.push_back(render(f));
  std::sort(parts.begin(), parts.end());
  return Json(parts);
}

template <typename Proof>
Json node_json(const Proof& p, const char* system, bool classical) {
  Json j;
  j["system"] = system;
  j["rule"] = std::string(rule_name(p.rule()));
  Json concl;
  concl["ante"] = ante_json(p.conclusion().ante);
  if constexpr (std::is_same_v<Proof, CProof>) {
    concl["succ"] = ante_json(p.conclusion().succ);
  } else {
    concl["succ"] = render(p.conclusion().succ);
  }
  (void)classical;
  j["conclusion"] = std::move(concl);
  if (p.principal()) j["principal"] = render(p.principal());
  if constexpr (std::is_same_v<Proof, IProof>) {
    if (p.cut_formula()) j["cut_formula"] = render(p.cut_formula());
  }
  Json prems = Json::array();
  for (const auto& q : p.premises())
    prems.push_back(node_json(q, system, classical));
  j["premises"] = std::move(prems);
  return j;
}

[[noreturn]] void bad(const std::string& msg) {
  throw std::invalid_argument("proof JSON: " + msg);
}

Formula formula_field(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string())
    bad(std::string("missing string field '") + field + "'");
  return parse_formula(j[field].get<std::string>(), /*allow_star=*/true);
}

Multiset multiset_field(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    bad(std::string("missing array field '") + field + "'");
  Multiset ms;
  for (const auto& s : j[field]) {
    if (!s.is_string()) bad("formula entries must be strings");
    ms.add(parse_formula(s.get<std::string>(), /*allow_star=*/true));
  }
  return ms;
}

CProof cproof_from_json(const Json& j) {
  if (!j.is_object()) bad("node must be an object");
  if (j.value("system", "") != "g3cp") bad("mixed or missing system tags");
  auto rule = crule_from_name(j.value("rule", ""));
  if (!rule) bad("unknown g3cp rule '" + j.value("rule", "") + "'");
  if (!j.contains("conclusion")) bad("missing conclusion");
  ClassicalSequent concl{multiset_field(j["conclusion"], "ante"),
                         multiset_field(j["conclusion"], "succ")};
  Formula principal = formula_field(j, "principal");
  std::vector<CProof> prems;
  if (j.contains("premises")) {
    for (const auto& q : j["premises"]) prems.push_back(cproof_from_json(q));
  }
  return CProof::make(*rule, std::move(concl), std::move(principal),
                      std::move(prems));
}

IProof iproof_from_json(const Json& j) {
  if (!j.is_object()) bad("node must be an object");
  if (j.value("system", "") != "g3ip") bad("mixed or missing system tags");
  auto rule = irule_from_name(j.value("rule", ""));
  if (!rule) bad("unknown g3ip rule '" + j.value("rule", "") + "'");
  if (!j.contains("conclusion") || !j["conclusion"].contains("succ") ||
      !j["conclusion"]["succ"].is_string())
    bad("conclusion of a g3ip node needs a single succedent string");
  IntSequent concl{multiset_field(j["conclusion"], "ante"),
                   formula_field(j["conclusion"], "succ")};
  Formula principal, cut_formula;
  if (j.contains("principal")) principal = formula_field(j, "principal");
  if (j.contains("cut_formula")) cut_formula = formula_field(j, "cut_formula");
  std::vector<IProof> prems;
  if (j.contains("premises")) {
    for (const auto& q : j["premises"]) prems.push_back(iproof_from_json(q));
  }
  return IProof::make(*rule, std::move(concl), std::move(principal),
                      std::move(cut_formula), std::move(prems));
}

template <typename Proof>
void render_ascii_rec(const Proof& p, int indent, std::string& out) {
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  out += rule_name(p.rule());
  if (p.principal()) {
    out += " [";
    out += render(p.principal());
    out += "]";
  }
  if constexpr (std::is_same_v<Proof, IProof>) {
    if (p.cut_formula()) {
      out += " [cut ";
      out += render(p.cut_formula());
      out += "]";
    }
  }
  out += ": ";
  out += render(p.conclusion());
  out += "\n";
  for (const auto& q : p.premises()) render_ascii_rec(q, indent + 1, out);
}

// bussproofs output: emit premises in order, then the inference line.
template <typename Proof>
void render_latex_rec(const Proof& p, std::string& out) {
  for (const auto& q : p.premises()) render_latex_rec(q, out);
  std::string label = std::string(rule_name(p.rule()));
  if (p.premises().empty()) out += "\\AxiomC{}\n";
  out += "\\RightLabel{$\\mathrm{" + label + "}$}\n";
  const char* inf = p.premises().size() == 2 ? "\\BinaryInfC" : "\\UnaryInfC";
  out += std::string(inf) + "{$" + render(p.conclusion(), Style::Latex) +
         "$}\n";
}

template <typename Proof>
std::string render_proof_impl(const Proof& p, Style style) {
  std::string out;
  if (style == Style::Ascii) {
    render_ascii_rec(p, 0, out);
  } else {
    out += "\\begin{prooftree}\n";
    render_latex_rec(p, out);
    out += "\\end{prooftree}\n";
  }
  return out;
}

}  // namespace

Json to_json(const CProof& p) { return node_json(p, "g3cp", true); }
Json to_json(const IProof& p) { return node_json(p, "g3ip", false); }

Json to_json(const Valuation& v) {
  Json j;
  for (const auto& [name, value] : v) j[name] = value;
  return j;
}

std::variant<CProof, IProof> proof_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("system")) bad("missing system tag");
  std::string system = j.value("system", "");
  if (system == "g3cp") return cproof_from_json(j);
  if (system == "g3ip") return iproof_from_json(j);
  bad("unknown system '" + system + "'");
}

std::string render_proof(const CProof& p, Style style) {
  return render_proof_impl(p, style);
}

std::string render_proof(const IProof& p, Style style) {
  return render_proof_impl(p, style);
}

}  // namespace emtrans
