#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mmsflow/election.hpp"
#include "mmsflow/maxflow.hpp"
#include "mmsflow/maximin.hpp"
#include "mmsflow/mms.hpp"
#include "mmsflow/rational.hpp"
#include "mmsflow/verification.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact committee elections under the maximin support rule";

    py::register_exception<mmsflow::ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<mmsflow::BoundError>(m, "BoundError", PyExc_RuntimeError);

    py::class_<mmsflow::Rational>(m, "Rational")
        .def(py::init<long long, long long>(), py::arg("numerator"), py::arg("denominator"))
        .def_property_readonly("numerator", &mmsflow::Rational::numerator)
        .def_property_readonly("denominator", &mmsflow::Rational::denominator)
        .def("__str__", &mmsflow::Rational::to_string)
        .def("__repr__",
             [](const mmsflow::Rational& r) { return "Rational(" + r.to_string() + ")"; })
        .def("__eq__", [](const mmsflow::Rational& a, const mmsflow::Rational& b) { return a == b; })
        .def("__lt__", [](const mmsflow::Rational& a, const mmsflow::Rational& b) { return a < b; })
        .def("__le__", [](const mmsflow::Rational& a, const mmsflow::Rational& b) { return a <= b; })
        .def("__hash__", [](const mmsflow::Rational& r) {
            return py::hash(py::make_tuple(r.numerator(), r.denominator()));
        });

    py::class_<mmsflow::Election>(m, "Election")
        .def(py::init([](int candidate_count, std::vector<std::vector<int>> ballots) {
                 return mmsflow::new_election(candidate_count, std::move(ballots));
             }),
             py::arg("candidate_count"), py::arg("ballots"))
        .def_readonly("candidate_count", &mmsflow::Election::candidate_count)
        .def_readonly("ballots", &mmsflow::Election::ballots)
        .def_property_readonly("voter_count", &mmsflow::Election::voter_count);

    py::class_<mmsflow::RestrictedElection>(m, "RestrictedElection")
        .def_readonly("active_voters", &mmsflow::RestrictedElection::active_voters)
        .def_readonly("subset", &mmsflow::RestrictedElection::subset)
        .def_readonly("restricted_ballots", &mmsflow::RestrictedElection::restricted_ballots);

    py::class_<mmsflow::FlowNetwork>(m, "FlowNetwork")
        .def(py::init<int, int, int>(), py::arg("node_count"), py::arg("source"), py::arg("sink"))
        .def("add_edge", &mmsflow::FlowNetwork::add_edge, py::arg("from_node"), py::arg("to_node"),
             py::arg("capacity"))
        .def_readonly("node_count", &mmsflow::FlowNetwork::node_count)
        .def_readonly("source", &mmsflow::FlowNetwork::source)
        .def_readonly("sink", &mmsflow::FlowNetwork::sink);

    py::class_<mmsflow::FlowResult>(m, "FlowResult")
        .def_readonly("value", &mmsflow::FlowResult::value)
        .def_readonly("edge_flows", &mmsflow::FlowResult::edge_flows);

    py::class_<mmsflow::MaximinOutcome>(m, "MaximinOutcome")
        .def_readonly("value", &mmsflow::MaximinOutcome::value)
        .def_readonly("surviving_candidates", &mmsflow::MaximinOutcome::surviving_candidates)
        .def_readonly("surviving_voters", &mmsflow::MaximinOutcome::surviving_voters)
        .def_readonly("iterations", &mmsflow::MaximinOutcome::iterations)
        .def_readonly("final_flow_value", &mmsflow::MaximinOutcome::final_flow_value);

    py::class_<mmsflow::KernelWitness>(m, "KernelWitness")
        .def_readonly("subset", &mmsflow::KernelWitness::subset)
        .def_readonly("touched_voters", &mmsflow::KernelWitness::touched_voters)
        .def_readonly("value", &mmsflow::KernelWitness::value);

    py::class_<mmsflow::CommitteeTrace>(m, "CommitteeTrace")
        .def_readonly("winners", &mmsflow::CommitteeTrace::winners)
        .def_readonly("round_values", &mmsflow::CommitteeTrace::round_values)
        .def_readonly("round_ties", &mmsflow::CommitteeTrace::round_ties)
        .def_readonly("flow_solves", &mmsflow::CommitteeTrace::flow_solves);

    py::class_<mmsflow::PjrViolation>(m, "PjrViolation")
        .def_readonly("ell", &mmsflow::PjrViolation::ell)
        .def_readonly("group", &mmsflow::PjrViolation::group);

    py::class_<mmsflow::PartyListProfile>(m, "PartyListProfile")
        .def(py::init([](std::vector<long long> sizes) {
                 return mmsflow::PartyListProfile{std::move(sizes)};
             }),
             py::arg("party_sizes"))
        .def_readonly("party_sizes", &mmsflow::PartyListProfile::party_sizes);

    py::class_<mmsflow::PartyListReport>(m, "PartyListReport")
        .def_readonly("mms_seats", &mmsflow::PartyListReport::mms_seats)
        .def_readonly("dhondt_seats", &mmsflow::PartyListReport::dhondt_seats)
        .def_readonly("cross_party_tie", &mmsflow::PartyListReport::cross_party_tie)
        .def("seats_match", &mmsflow::PartyListReport::seats_match);

    m.def("restrict_to",
          [](const mmsflow::Election& election, std::vector<int> subset) {
              return mmsflow::restrict_to(election, std::move(subset));
          },
          py::arg("election"), py::arg("subset"));
    m.def("max_flow", &mmsflow::max_flow, py::arg("network"));
    m.def("build_support_network", &mmsflow::build_support_network, py::arg("restriction"));
    m.def("maximin_support",
          [](const mmsflow::Election& election, const std::vector<int>& subset) {
              return mmsflow::maximin_support(election, subset);
          },
          py::arg("election"), py::arg("subset"));
    m.def("maximin_oracle", &mmsflow::maximin_oracle, py::arg("election"), py::arg("subset"),
          py::arg("max_subset_size") = mmsflow::kMaximinOracleMaxSubset);
    m.def("round_scores", &mmsflow::round_scores, py::arg("election"), py::arg("committee"),
          py::arg("thread_count") = 1);
    m.def("mms_winners", &mmsflow::mms_winners, py::arg("election"), py::arg("k"),
          py::arg("thread_count") = 1);
    m.def("dhondt",
          [](const std::vector<long long>& party_sizes, int k) {
              return mmsflow::dhondt(party_sizes, k);
          },
          py::arg("party_sizes"), py::arg("k"));
    m.def("check_pjr", &mmsflow::check_pjr, py::arg("election"), py::arg("committee"),
          py::arg("k"), py::arg("max_voters") = mmsflow::kPjrMaxVoters);
    m.def("party_list_election", &mmsflow::party_list_election, py::arg("profile"), py::arg("k"));
    m.def("compare_party_list", &mmsflow::compare_party_list, py::arg("profile"), py::arg("k"));
    m.def("check_party_list_equivalence", &mmsflow::check_party_list_equivalence,
          py::arg("profile"), py::arg("k"));
}
