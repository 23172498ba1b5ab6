#include "weylhom/criterion.hpp"
#include "weylhom/ext_classical.hpp"
#include "weylhom/json_io.hpp"
#include "weylhom/loubert.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace weylhom;

namespace {

py::object to_py_int(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Partition parse_partition(const std::string& s) { return Partition::parse(s); }

ClassicalType parse_type(const std::string& s) {
    if (s == "B")
        return ClassicalType::B;
    if (s == "C")
        return ClassicalType::C;
    if (s == "D")
        return ClassicalType::D;
    throw std::invalid_argument("type must be one of B, C, D");
}

} // namespace

PYBIND11_MODULE(weylhom, m) {
    m.doc() = "Exact Hom/Ext calculator for Weyl modules of GL_n when one "
              "weight is a hook";

    // arithmetic
    m.def("binomial",
          [](long n, long k) { return to_py_int(binomial(n, k)); },
          py::arg("n"), py::arg("k"), "C(n, k), exact");
    m.def("binomial_mod",
          [](long n, long k, long p) { return binomial_mod(n, k, Prime(p)); },
          py::arg("n"), py::arg("k"), py::arg("p"),
          "C(n, k) mod p via base-p digits");
    m.def("base_p_digits",
          [](long y, long p) { return base_p_digits(y, Prime(p)); }, py::arg("y"),
          py::arg("p"), "least i with p^i > y");
    m.def("binomial_gcd",
          [](long x, long y) { return to_py_int(binomial_gcd(x, y)); },
          py::arg("x"), py::arg("y"),
          "gcd of C(x,1), C(x+1,2), ..., C(x+y-1,y)");
    m.def("p_divides_binomial_gcd",
          [](long x, long y, long p) {
              return p_divides_binomial_gcd(x, y, Prime(p));
          },
          py::arg("x"), py::arg("y"), py::arg("p"));
    m.def("garnir_content_is_zero",
          [](const std::vector<long>& a, long p) {
              return garnir_content_is_zero(a, Prime(p));
          },
          py::arg("a"), py::arg("p"));

    // partitions
    m.def("transpose",
          [](const std::string& lam) {
              return parse_partition(lam).transpose().to_string();
          },
          py::arg("lam"));
    m.def("q_statistic",
          [](const std::string& lam) {
              auto s = parse_partition(lam).q_statistic();
              return py::make_tuple(s.q, s.part);
          },
          py::arg("lam"), "(q, lambda_q) with the all-ones convention (0, 0)");
    m.def("dominance_leq",
          [](const std::string& lam, const std::string& mu) {
              return dominance_leq(parse_partition(lam), parse_partition(mu));
          },
          py::arg("lam"), py::arg("mu"));
    m.def("enumerate_partitions",
          [](int r, int max_parts) {
              std::vector<std::string> out;
              for (const Partition& p : enumerate_partitions(r, max_parts))
                  out.push_back(p.to_string());
              return out;
          },
          py::arg("r"), py::arg("max_parts"));
    m.def("enumerate_hooks",
          [](int r) {
              std::vector<std::string> out;
              for (const Hook& h : enumerate_hooks(r))
                  out.push_back(h.to_string());
              return out;
          },
          py::arg("r"));

    // tableaux
    m.def("straighten",
          [](const std::string& tableau, const std::string& shape) {
              const Hook h = Hook::parse(shape);
              const RawTableau raw = parse_tableau(tableau);
              int arm_degree = 0;
              for (auto& [letter, mult] : raw.arm)
                  arm_degree += mult;
              if (arm_degree != h.arm() ||
                  static_cast<int>(raw.leg.size()) != h.leg())
                  throw std::invalid_argument("tableau does not have the given shape");
              py::list out;
              const TableauCombo result =
                  straighten(normalize_tableau(raw.arm, raw.leg, 1));
              for (auto& [t, c] : result.terms())
                  out.append(py::make_tuple(to_py_int(c), t.to_string()));
              return out;
          },
          py::arg("tableau"), py::arg("shape"),
          "standard-basis expansion as (coefficient, tableau) pairs");
    m.def("standard_content_basis",
          [](const std::string& shape, const Composition& content) {
              std::vector<std::string> out;
              for (const HookTableau& t :
                   standard_content_basis(Hook::parse(shape), content))
                  out.push_back(t.to_string());
              return out;
          },
          py::arg("shape"), py::arg("content"));

    // hom spaces
    m.def("enumerate_leg_indices",
          [](const std::string& lam, const std::string& hook) {
              return enumerate_leg_indices(parse_partition(lam), Hook::parse(hook));
          },
          py::arg("lam"), py::arg("hook"));
    m.def("hom_dim_oracle",
          [](const std::string& lam, const std::string& hook, long p) {
              return json_to_py(to_json(
                  hom_dim_oracle(parse_partition(lam), Hook::parse(hook), Prime(p))));
          },
          py::arg("lam"), py::arg("hook"), py::arg("p"),
          "brute-force nullspace: dict with dim and kernel");
    m.def("derived_relation_system",
          [](const std::string& lam, const std::string& hook, long p) {
              return json_to_py(to_json(derived_relation_system(
                  parse_partition(lam), Hook::parse(hook), Prime(p))));
          },
          py::arg("lam"), py::arg("hook"), py::arg("p"));
    m.def("witness_coeffs",
          [](const std::string& lam, const std::string& hook) {
              py::dict out;
              for (auto& [idx, d] :
                   witness_coeffs(parse_partition(lam), Hook::parse(hook)))
                  out[py::str(leg_index_label(idx))] = to_py_int(d);
              return out;
          },
          py::arg("lam"), py::arg("hook"));

    // criterion
    m.def("hom_dim_criterion",
          [](const std::string& lam, const std::string& hook, long p) {
              return json_to_py(to_json(hom_dim_criterion(
                  parse_partition(lam), Hook::parse(hook), Prime(p))));
          },
          py::arg("lam"), py::arg("hook"), py::arg("p"),
          "closed-form decision with certificate");
    m.def("hom_dim_hook_source",
          [](const std::string& hook, const std::string& mu, long p) {
              return json_to_py(to_json(hom_dim_hook_source(
                  Hook::parse(hook), parse_partition(mu), Prime(p))));
          },
          py::arg("hook"), py::arg("mu"), py::arg("p"),
          "hook as the source, via the transpose");
    m.def("carter_payne_targets",
          [](const std::string& lam) {
              std::vector<std::string> out;
              for (const Partition& p : carter_payne_targets(parse_partition(lam)))
                  out.push_back(p.to_string());
              return out;
          },
          py::arg("lam"));
    m.def("sweep_compare",
          [](int r, const std::vector<long>& primes) {
              std::vector<Prime> ps;
              for (long p : primes)
                  ps.emplace_back(p);
              py::list out;
              for (const SweepRow& row : sweep_compare(r, ps)) {
                  py::dict d;
                  d["lambda"] = row.lambda.to_string();
                  d["hook"] = row.hook.to_string();
                  d["p"] = row.p;
                  d["dim_theorem"] = row.dim_criterion;
                  d["dim_oracle"] = row.dim_oracle;
                  d["agree"] = row.agree();
                  d["case"] = row.case_tag;
                  out.append(d);
              }
              return out;
          },
          py::arg("r"), py::arg("primes"));

    // garnir-content route
    m.def("loubert_decide",
          [](const std::string& lam, const std::string& hook, long p) {
              return json_to_py(to_json(
                  loubert_decide(parse_partition(lam), Hook::parse(hook), Prime(p))));
          },
          py::arg("lam"), py::arg("hook"), py::arg("p"));
    m.def("loubert_equivalence_check",
          [](int r, long p) {
              py::list out;
              for (const LoubertDiscrepancy& d : loubert_equivalence_check(r, Prime(p))) {
                  py::dict e;
                  e["lambda"] = d.lambda.to_string();
                  e["hook"] = d.hook.to_string();
                  e["dim_loubert"] = d.dim_loubert;
                  e["dim_criterion"] = d.dim_criterion;
                  out.append(e);
              }
              return out;
          },
          py::arg("r"), py::arg("p"));

    // ext and classical groups
    m.def("ext1_between_hooks",
          [](const std::string& hook, int d) {
              return to_string(ext1_between_hooks(Hook::parse(hook), d));
          },
          py::arg("hook"), py::arg("d"), "\"Z/2\" or \"0\"");
    m.def("ext1_cross_check",
          [](const std::string& hook, int d) {
              return ext1_cross_check(Hook::parse(hook), d);
          },
          py::arg("hook"), py::arg("d"));
    m.def("classical_nonvanishing",
          [](const std::string& lam, const std::string& hook, long p,
             const std::string& type, int rank) {
              return to_string(classical_nonvanishing(parse_partition(lam),
                                                      Hook::parse(hook), Prime(p),
                                                      parse_type(type), rank));
          },
          py::arg("lam"), py::arg("hook"), py::arg("p"), py::arg("type"),
          py::arg("n"));

    m.attr("__version__") = "1.0.0";
}
