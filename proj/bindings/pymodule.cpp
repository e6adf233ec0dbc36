// Python face of the library: words, backends, the level-0 and tower word
// problems, and the separating-set harness.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gtower/abelian.hpp"
#include "gtower/freeprod.hpp"
#include "gtower/hnntower.hpp"
#include "gtower/separator.hpp"
#include "gtower/sets.hpp"
#include "gtower/words.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Exact big integers cross the boundary as python ints (via decimal text).
template <>
struct type_caster<gtower::BigInt> {
    PYBIND11_TYPE_CASTER(gtower::BigInt, const_name("int"));

    bool load(handle src, bool) {
        PyObject* as_long = PyNumber_Long(src.ptr());
        if (!as_long) {
            PyErr_Clear();
            return false;
        }
        object owner = reinterpret_steal<object>(as_long);
        value = gtower::BigInt(static_cast<std::string>(str(owner)));
        return true;
    }

    static handle cast(const gtower::BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using namespace gtower;

std::string verdict_str(IsoVerdict v) { return iso_verdict_name(v); }

}  // namespace

PYBIND11_MODULE(gtower, m) {
    m.doc() = "word problems over a recursively enumerated HNN tower";

    py::register_exception<BudgetExhausted>(m, "BudgetExhaustedError");
    py::register_exception<ParseError>(m, "WordParseError");
    py::register_exception<OracleInconsistent>(m, "OracleInconsistentError");

    py::enum_<Family>(m, "Family").value("N", Family::N).value("M", Family::M);
    py::enum_<Side>(m, "Side").value("A", Side::A).value("B", Side::B);

    py::class_<GroupWord>(m, "Word")
        .def(py::init<>())
        .def("__mul__", &GroupWord::operator*)
        .def("inverse", &GroupWord::inverse)
        .def("pow", &GroupWord::pow)
        .def("__len__", &GroupWord::size)
        .def("__eq__", [](const GroupWord& a, const GroupWord& b) { return a == b; })
        .def("__str__", &render_word)
        .def("__repr__", [](const GroupWord& w) { return "Word('" + render_word(w) + "')"; })
        .def("render", &render_word)
        .def("empty", &GroupWord::empty)
        .def("min_level", &GroupWord::min_level)
        .def("has_stable_letter", &GroupWord::has_stable_letter);

    m.def("parse", &parse_word, py::arg("text"));
    m.def("render", &render_word, py::arg("word"));
    m.def("a", [](std::uint64_t n, unsigned char mm, const BigInt& e) {
              return GroupWord::generator(GeneratorSymbol::abelian(Side::A, n, mm), e);
          },
          py::arg("n"), py::arg("m"), py::arg("exp") = BigInt(1));
    m.def("b", [](std::uint64_t n, unsigned char mm, const BigInt& e) {
              return GroupWord::generator(GeneratorSymbol::abelian(Side::B, n, mm), e);
          },
          py::arg("n"), py::arg("m"), py::arg("exp") = BigInt(1));
    m.def("t", [](std::uint64_t i, const BigInt& e) {
              return GroupWord::generator(GeneratorSymbol::stable(i), e);
          },
          py::arg("i"), py::arg("exp") = BigInt(1));

    py::class_<SetPairBackend>(m, "SetPairBackend")
        .def("element_at", &SetPairBackend::element_at)
        .def("check_index", &SetPairBackend::check_index)
        .def("decides_membership", &SetPairBackend::decides_membership)
        .def("is_member", &SetPairBackend::is_member)
        .def("index_of",
             [](SetPairBackend& b, Family f, std::uint64_t n, std::uint64_t budget)
                 -> std::optional<std::uint64_t> {
                 IndexLookup r = b.index_of(f, n, budget);
                 if (r.status == IndexLookup::Status::Found) return r.index;
                 return std::nullopt;
             },
             py::arg("family"), py::arg("n"), py::arg("budget") = 0);

    py::class_<MockBackend, SetPairBackend>(m, "MockBackend").def(py::init<>());
    py::class_<ExplicitListBackend, SetPairBackend>(m, "ExplicitListBackend")
        .def(py::init<std::vector<std::uint64_t>, std::vector<std::uint64_t>>())
        .def_static("from_file", &ExplicitListBackend::from_file);
    py::class_<DovetailBackend, SetPairBackend>(m, "DovetailBackend")
        .def(py::init([](std::uint64_t budget) {
                 return DovetailBackend(DovetailBackend::bundled_table(), budget);
             }),
             py::arg("step_budget"))
        .def("dovetail_step",
             [](DovetailBackend& b, std::uint64_t steps) {
                 std::vector<std::tuple<std::string, std::uint64_t, std::uint64_t>> out;
                 for (const auto& e : b.dovetail_step(steps)) {
                     out.emplace_back(family_name(e.family), e.index, e.value);
                 }
                 return out;
             })
        .def("steps_executed", &DovetailBackend::steps_executed)
        .def("set_step_budget", &DovetailBackend::set_step_budget);

    m.def("solve_exponent_equation", &solve_exponent_equation, py::arg("lambda0"),
          py::arg("lambda1"), py::arg("base"));
    m.def("iso_probe",
          [](SetPairBackend& b, std::uint64_t n, std::uint64_t budget) {
              return verdict_str(iso_probe(b, n, budget));
          },
          py::arg("backend"), py::arg("n"), py::arg("budget") = 0);

    m.def("is_trivial_g0", &is_trivial_g0, py::arg("backend"), py::arg("word"));
    m.def("cyclic_membership", &cyclic_membership, py::arg("backend"), py::arg("word"),
          py::arg("i"), py::arg("side"));

    py::class_<ReductionReport>(m, "ReductionReport")
        .def_readonly("result", &ReductionReport::result)
        .def_readonly("pinches_removed", &ReductionReport::pinches_removed)
        .def_readonly("level", &ReductionReport::level);

    m.def("britton_reduce", &britton_reduce, py::arg("backend"), py::arg("word"));
    m.def("is_reduced", &is_reduced, py::arg("backend"), py::arg("word"), py::arg("k"));
    m.def("is_trivial_in_g", &is_trivial_in_g, py::arg("backend"), py::arg("word"));
    m.def("are_equal", &are_equal, py::arg("backend"), py::arg("w1"), py::arg("w2"));
    m.def("torsion_probe", &torsion_probe, py::arg("backend"), py::arg("word"),
          py::arg("max_power"));
    m.def("min_level", &min_level, py::arg("word"));

    py::class_<Violation>(m, "Violation")
        .def_readonly("n", &Violation::n)
        .def_readonly("reason", &Violation::reason);
    py::class_<SeparationReport>(m, "SeparationReport")
        .def_readonly("range_max", &SeparationReport::range_max)
        .def_readonly("set_C", &SeparationReport::set_C)
        .def_readonly("set_A", &SeparationReport::set_A)
        .def_readonly("violations", &SeparationReport::violations);

    py::class_<ConjugacyOracle>(m, "ConjugacyOracle");
    py::class_<FaithfulMockOracle, ConjugacyOracle>(m, "FaithfulMockOracle")
        .def(py::init<SetPairBackend&>(), py::keep_alive<1, 2>());
    py::class_<AllFalseOracle, ConjugacyOracle>(m, "AllFalseOracle").def(py::init<>());
    py::class_<AdversarialOracle, ConjugacyOracle>(m, "AdversarialOracle")
        .def(py::init<SetPairBackend&>(), py::keep_alive<1, 2>());

    m.def("compute_separating_set", &compute_separating_set, py::arg("oracle"),
          py::arg("backend"), py::arg("range_max"));
}
