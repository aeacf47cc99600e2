// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>

#include "tabuq/angle_opt.hpp"
#include "tabuq/bench.hpp"
#include "tabuq/orlib.hpp"
#include "tabuq/qaoa.hpp"
#include "tabuq/qubo.hpp"
#include "tabuq/samplers.hpp"
#include "tabuq/tabu.hpp"
#include "tabuq/version.hpp"

namespace py = pybind11;
using namespace tabuq;

namespace {

// lets python subclasses provide their own neighborhood sampler
class PySampler : public NeighborhoodSampler {
public:
    using NeighborhoodSampler::NeighborhoodSampler;
    BitString sample_best(const SubProblem& sub, const SamplerContext& ctx) override {
        PYBIND11_OVERRIDE_PURE(BitString, NeighborhoodSampler, sample_best, sub, ctx);
    }
};

SamplerContext context_of(const SubProblem& sub) {
    return SamplerContext{{}, sub.base_restricted()};
}

}  // namespace

PYBIND11_MODULE(_tabuq, m) {
    m.doc() = "QUBO tabu search with pluggable neighborhood samplers";
    m.attr("__version__") = kVersion;

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::enum_<Sense>(m, "Sense")
        .value("minimize", Sense::minimize)
        .value("maximize_negated", Sense::maximize_negated);

    py::class_<QuboTerm>(m, "QuboTerm")
        .def(py::init<int, int, double>())
        .def_readwrite("i", &QuboTerm::i)
        .def_readwrite("j", &QuboTerm::j)
        .def_readwrite("value", &QuboTerm::value)
        .def("__repr__", [](const QuboTerm& t) {
            std::ostringstream os;
            os << "QuboTerm(" << t.i << ", " << t.j << ", " << t.value << ")";
            return os.str();
        });

    py::class_<Qubo>(m, "Qubo")
        .def(py::init<int, std::vector<QuboTerm>, double, Sense>(), py::arg("n"),
             py::arg("terms") = std::vector<QuboTerm>{}, py::arg("offset") = 0.0,
             py::arg("sense") = Sense::minimize)
        .def(py::init([](int n, const std::vector<std::tuple<int, int, double>>& terms,
                         double offset) {
                 std::vector<QuboTerm> t;
                 t.reserve(terms.size());
                 for (const auto& [i, j, v] : terms) t.push_back({i, j, v});
                 return Qubo(n, std::move(t), offset);
             }),
             py::arg("n"), py::arg("terms"), py::arg("offset") = 0.0)
        .def_property_readonly("n", &Qubo::num_vars)
        .def_property_readonly("offset", &Qubo::offset)
        .def_property_readonly("sense", &Qubo::sense)
        .def("evaluate", &Qubo::evaluate)
        .def("diagonal", &Qubo::diagonal)
        .def("pair_coefficient", &Qubo::pair_coefficient)
        .def_property_readonly("terms", &Qubo::terms)
        .def("__repr__", [](const Qubo& q) {
            std::ostringstream os;
            os << "Qubo(n=" << q.num_vars() << ", nnz=" << q.nonzero_count() << ")";
            return os.str();
        });

    py::class_<IsingModel>(m, "IsingModel")
        .def_readonly("n", &IsingModel::n)
        .def_readonly("h", &IsingModel::h)
        .def_readonly("couplings", &IsingModel::couplings)
        .def_readonly("offset", &IsingModel::offset)
        .def("energy", &IsingModel::energy);

    m.def("to_ising", &to_ising);
    m.def("spins_of", &spins_of);
    m.def("hamming_distance", &hamming_distance);

    py::class_<MoveTable>(m, "MoveTable")
        .def_readonly("delta", &MoveTable::delta)
        .def_readonly("owner_hash", &MoveTable::owner_hash);

    m.def("init_move_table", &init_move_table);
    m.def(
        "apply_flip",
        [](const Qubo& q, BitString x, MoveTable table, int i) {
            apply_flip(q, x, table, i);
            return py::make_tuple(std::move(x), std::move(table));
        },
        "Returns the flipped bitstring and the updated move table.");

    py::class_<SubProblem>(m, "SubProblem")
        .def_readonly("parent_indices", &SubProblem::parent_indices)
        .def_readonly("reduced", &SubProblem::reduced)
        .def_readonly("base", &SubProblem::base)
        .def_property_readonly("k", &SubProblem::k)
        .def("embed", &SubProblem::embed)
        .def("base_restricted", &SubProblem::base_restricted);

    m.def("clamp", &clamp);

    m.def("parse_orlib", py::overload_cast<const std::string&>(&parse_orlib), py::arg("text"));
    m.def("parse_orlib_file", &parse_orlib_file);
    m.def("write_orlib", [](const std::vector<Qubo>& instances) {
        std::ostringstream os;
        write_orlib(os, instances);
        return os.str();
    });

    py::enum_<SelectionMode>(m, "SelectionMode")
        .value("greedy", SelectionMode::greedy)
        .value("weighted_random", SelectionMode::weighted_random);

    py::enum_<StopReason>(m, "StopReason")
        .value("target", StopReason::target)
        .value("max_iters", StopReason::max_iters)
        .value("cutoff", StopReason::cutoff);

    py::class_<TabuParams>(m, "TabuParams")
        .def(py::init<>())
        .def_readwrite("tenure", &TabuParams::tenure)
        .def_readwrite("rand_tenure", &TabuParams::rand_tenure)
        .def_readwrite("max_iters", &TabuParams::max_iters)
        .def_readwrite("improvement_cutoff", &TabuParams::improvement_cutoff)
        .def_readwrite("target", &TabuParams::target)
        .def_readwrite("seed", &TabuParams::seed)
        .def_readwrite("k", &TabuParams::k)
        .def_readwrite("selection_mode", &TabuParams::selection_mode);

    py::class_<TraceRecord>(m, "TraceRecord")
        .def_readonly("iteration", &TraceRecord::iteration)
        .def_readonly("f_ts", &TraceRecord::f_ts)
        .def_readonly("f_best", &TraceRecord::f_best)
        .def_readonly("flipped", &TraceRecord::flipped)
        .def_readonly("sampler_accepted", &TraceRecord::sampler_accepted);

    py::class_<RunTrace>(m, "RunTrace")
        .def_readonly("records", &RunTrace::records)
        .def_readonly("reason", &RunTrace::reason)
        .def("to_csv", [](const RunTrace& t) {
            std::ostringstream os;
            write_trace_csv(os, t);
            return os.str();
        });

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("x_best", &SearchResult::x_best)
        .def_readonly("f_best", &SearchResult::f_best)
        .def_readonly("trace", &SearchResult::trace);

    m.def("basic_tabu_search", &basic_tabu_search, py::arg("qubo"), py::arg("x0"),
          py::arg("params"));
    m.def("sampler_tabu_search", &sampler_tabu_search, py::arg("qubo"), py::arg("x0"),
          py::arg("params"), py::arg("sampler"));
    m.def(
        "select_variables",
        [](const MoveTable& table, const std::vector<int>& tabu, int k, SelectionMode mode,
           std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            return select_variables(table, tabu, k, mode, rng);
        },
        py::arg("table"), py::arg("tabu"), py::arg("k"),
        py::arg("mode") = SelectionMode::greedy, py::arg("seed") = 0);

    py::class_<PenaltySpec>(m, "PenaltySpec")
        .def(py::init<>())
        .def_readwrite("weights", &PenaltySpec::weights)
        .def_readwrite("reference", &PenaltySpec::reference)
        .def_readwrite("scale", &PenaltySpec::scale);

    py::class_<QaoaParams>(m, "QaoaParams")
        .def(py::init<>())
        .def_readwrite("p", &QaoaParams::p)
        .def_readwrite("gammas", &QaoaParams::gammas)
        .def_readwrite("betas", &QaoaParams::betas)
        .def_readwrite("penalty", &QaoaParams::penalty)
        .def_readwrite("shots", &QaoaParams::shots);

    py::class_<QaoaState>(m, "QaoaState")
        .def_readonly("amplitudes", &QaoaState::amplitudes)
        .def_readonly("energies", &QaoaState::energies)
        .def_property_readonly("num_qubits", &QaoaState::num_qubits)
        .def("norm_squared", &QaoaState::norm_squared)
        .def("to_csv", [](const QaoaState& s) {
            std::ostringstream os;
            dump_state_csv(os, s);
            return os.str();
        });

    m.def("diagonal_energies", &diagonal_energies);
    m.def("penalty_diagonal", &penalty_diagonal);
    m.def("evolve", &evolve);
    m.def("exact_expectation", &exact_expectation);
    m.def("energy_variance", &energy_variance);
    m.def(
        "sample",
        [](const QaoaState& state, int shots, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            std::vector<std::pair<BitString, double>> out;
            for (auto& s : sample(state, shots, rng)) out.emplace_back(std::move(s.bits), s.energy);
            return out;
        },
        py::arg("state"), py::arg("shots"), py::arg("seed") = 0);
    m.def(
        "shot_expectation",
        [](const QaoaState& state, int shots, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            return shot_expectation(state, shots, rng);
        },
        py::arg("state"), py::arg("shots"), py::arg("seed") = 0);
    m.def("improvement_probability", &improvement_probability);

    py::enum_<RestartStrategy>(m, "RestartStrategy")
        .value("none", RestartStrategy::none)
        .value("doubling_population", RestartStrategy::doubling_population);

    py::class_<OptBudget>(m, "OptBudget")
        .def(py::init<>())
        .def_readwrite("max_evals", &OptBudget::max_evals)
        .def_readwrite("restarts", &OptBudget::restarts)
        .def_readwrite("seed", &OptBudget::seed);

    py::class_<Evaluation>(m, "Evaluation")
        .def_readonly("angles", &Evaluation::angles)
        .def_readonly("value", &Evaluation::value);

    py::class_<OptResult>(m, "OptResult")
        .def_readonly("best_angles", &OptResult::best_angles)
        .def_readonly("best_value", &OptResult::best_value)
        .def_readonly("evals_used", &OptResult::evals_used)
        .def_readonly("history", &OptResult::history);

    m.def("optimize_angles", &optimize_angles, py::arg("objective"), py::arg("p"),
          py::arg("budget"));
    m.def("subproblem_quality_ratio", &subproblem_quality_ratio);

    py::class_<SamplerContext>(m, "SamplerContext")
        .def_property_readonly(
            "move_values",
            [](const SamplerContext& ctx) {
                return std::vector<double>(ctx.move_values.begin(), ctx.move_values.end());
            })
        .def_readonly("reference", &SamplerContext::reference);

    py::class_<NeighborhoodSampler, PySampler>(m, "NeighborhoodSampler")
        .def(py::init<>())
        .def("sample_best", &NeighborhoodSampler::sample_best);

    py::class_<BruteForceSampler, NeighborhoodSampler>(m, "BruteForceSampler").def(py::init<>());

    py::class_<SaConfig>(m, "SaConfig")
        .def(py::init<>())
        .def_readwrite("temperature", &SaConfig::temperature)
        .def_readwrite("steps", &SaConfig::steps)
        .def_readwrite("restarts", &SaConfig::restarts);

    py::class_<SaSampler, NeighborhoodSampler>(m, "SaSampler")
        .def(py::init<SaConfig, std::uint64_t>(), py::arg("config"), py::arg("seed") = 0);

    py::class_<QaoaSamplerConfig>(m, "QaoaSamplerConfig")
        .def(py::init<>())
        .def_readwrite("p", &QaoaSamplerConfig::p)
        .def_readwrite("penalized", &QaoaSamplerConfig::penalized)
        .def_readwrite("penalty_scale", &QaoaSamplerConfig::penalty_scale)
        .def_readwrite("m", &QaoaSamplerConfig::m)
        .def_readwrite("use_optimizer_history", &QaoaSamplerConfig::use_optimizer_history)
        .def_readwrite("budget", &QaoaSamplerConfig::budget)
        .def_readwrite("shots", &QaoaSamplerConfig::shots);

    py::class_<QaoaSampler, NeighborhoodSampler>(m, "QaoaSampler")
        .def(py::init<QaoaSamplerConfig, std::uint64_t>(), py::arg("config"), py::arg("seed") = 0);

    m.def("brute_force_best", &brute_force_best);
    m.def(
        "sa_best",
        [](const SubProblem& sub, const SaConfig& cfg, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            return sa_best(sub, cfg, rng);
        },
        py::arg("sub"), py::arg("config"), py::arg("seed") = 0);
    m.def(
        "qaoa_best",
        [](const SubProblem& sub, const QaoaSamplerConfig& cfg, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            const BitString ref = sub.base_restricted();
            const std::vector<double> deltas = init_move_table(sub.reduced, ref).delta;
            const SamplerContext ctx{deltas, ref};
            return qaoa_best(sub, cfg, ctx, rng);
        },
        py::arg("sub"), py::arg("config"), py::arg("seed") = 0,
        "Penalty context (move values and reference) is derived from the subproblem itself.");
    m.def("make_context", &context_of,
          "Context with the reference solution only; move values empty.");

    py::class_<ProblemTraces>(m, "ProblemTraces")
        .def(py::init<>())
        .def_readwrite("label", &ProblemTraces::label)
        .def_readwrite("optimum", &ProblemTraces::optimum)
        .def_readwrite("runs", &ProblemTraces::runs);

    py::class_<EcdfReport>(m, "EcdfReport")
        .def_readonly("target_count", &EcdfReport::target_count)
        .def_readonly("targets", &EcdfReport::targets)
        .def_readonly("normalized_targets", &EcdfReport::normalized_targets)
        .def_readonly("proportion", &EcdfReport::proportion);

    m.def("compute_ecdf", &compute_ecdf, py::arg("problems"), py::arg("target_count"));
    m.def("best_known_table", &best_known_table, py::return_value_policy::copy);

    py::class_<ReducedInstance>(m, "ReducedInstance")
        .def_readonly("qubo", &ReducedInstance::qubo)
        .def_readonly("parent_label", &ReducedInstance::parent_label)
        .def_readonly("parent_indices", &ReducedInstance::parent_indices)
        .def_readonly("clamp_source", &ReducedInstance::clamp_source);

    m.def("make_reduced_suite", &make_reduced_suite, py::arg("instances"), py::arg("labels"),
          py::arg("seed"), py::arg("per_instance") = 5, py::arg("size") = 20,
          py::arg("ts_tenure") = 10, py::arg("ts_iters") = 2000);
}
