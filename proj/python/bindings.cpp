// Python face of the library. Strings cross the boundary in artifact text
// form: '0'/'1' digits, with "eps" naming the empty string on the way out
// and "" or "eps" both accepted on the way in. Distributions cross as a
// thin wrapper so meta and counts stay together.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "algoprob/analysis.hpp"
#include "algoprob/cellular.hpp"
#include "algoprob/distribution.hpp"
#include "algoprob/fsa.hpp"
#include "algoprob/grammar.hpp"
#include "algoprob/runner.hpp"
#include "algoprob/strings.hpp"
#include "algoprob/transducer.hpp"
#include "algoprob/turing.hpp"

namespace py = pybind11;
using namespace algoprob;

namespace {

BinaryString to_bs(const std::string& s) {
    if (s.empty()) return BinaryString();
    return BinaryString::from_text(s);
}

std::vector<BinaryString> to_bs_list(const std::vector<std::string>& ss) {
    std::vector<BinaryString> out;
    out.reserve(ss.size());
    for (const auto& s : ss) out.push_back(to_bs(s));
    return out;
}

const EncodingScheme& scheme_or_throw(const std::string& id) {
    const EncodingScheme* s = find_scheme(id);
    if (!s) throw std::invalid_argument("unknown scheme: " + id);
    return *s;
}

CaFamily family_or_throw(const std::string& name) {
    if (name == "elementary") return CaFamily::Elementary;
    if (name == "general") return CaFamily::General;
    throw std::invalid_argument("family must be 'elementary' or 'general'");
}

RankMethod method_or_throw(const std::string& name) {
    if (name == "kendall") return RankMethod::Kendall;
    if (name == "spearman") return RankMethod::Spearman;
    if (name == "pearson") return RankMethod::Pearson;
    throw std::invalid_argument("method must be 'kendall', 'spearman' or 'pearson'");
}

std::optional<Sampler> sampler_of(std::uint64_t sample, std::uint64_t seed) {
    if (sample == 0) return std::nullopt;
    return Sampler{seed, sample};
}

py::dict comparison_dict(const RankComparison& c) {
    py::dict d;
    d["model_a"] = c.model_a;
    d["model_b"] = c.model_b;
    std::vector<std::string> shared;
    for (const auto& s : c.shared_support) shared.push_back(s.text());
    d["shared_support"] = shared;
    d["kendall"] = c.kendall ? py::cast(*c.kendall) : py::none();
    d["spearman"] = c.spearman ? py::cast(*c.spearman) : py::none();
    d["pearson"] = c.pearson ? py::cast(*c.pearson) : py::none();
    return d;
}

EmpiricalDistribution dist_from_counts(const std::map<std::string, double>& counts,
                                       const std::string& model) {
    EmpiricalDistribution d;
    d.meta().model = model;
    bool integral = true;
    for (const auto& [k, v] : counts) {
        if (v < 0) throw std::invalid_argument("counts must be nonnegative");
        if (v != static_cast<double>(static_cast<long long>(v))) integral = false;
        (void)k;
    }
    if (!integral) d.mark_real();
    for (const auto& [k, v] : counts) {
        if (v == 0)
            d.ensure(to_bs(k));
        else
            d.add(to_bs(k), v);
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Output distributions of small computational models";

    py::class_<EmpiricalDistribution>(m, "Distribution")
        .def_static(
            "from_counts",
            [](const std::map<std::string, double>& counts, const std::string& model) {
                return dist_from_counts(counts, model);
            },
            py::arg("counts"), py::arg("model") = "manual")
        .def_static("from_csv",
                    [](const std::string& text) {
                        std::istringstream is(text);
                        return read_csv(is);
                    })
        .def_static("from_json",
                    [](const std::string& text) {
                        std::istringstream is(text);
                        return read_json(is);
                    })
        .def("to_csv", [](const EmpiricalDistribution& d) { return to_csv(d); })
        .def("to_json", [](const EmpiricalDistribution& d) { return to_json(d); })
        .def("counts",
             [](const EmpiricalDistribution& d) {
                 py::dict out;
                 for (const auto& [s, c] : d.counts()) out[py::str(s.text())] = c;
                 return out;
             })
        .def("count", [](const EmpiricalDistribution& d, const std::string& s) {
            return d.count(to_bs(s));
        })
        .def("probability",
             [](const EmpiricalDistribution& d, const std::string& s) {
                 double denom = d.denominator();
                 return denom > 0 ? d.count(to_bs(s)) / denom : 0.0;
             })
        .def("complexity",
             [](const EmpiricalDistribution& d, const std::string& s) -> py::object {
                 auto v = ctm_complexity(d, to_bs(s));
                 return v ? py::cast(*v) : py::none();
             })
        .def("support",
             [](const EmpiricalDistribution& d) {
                 std::vector<std::string> out;
                 for (const auto& s : d.support()) out.push_back(s.text());
                 return out;
             })
        .def_property_readonly("support_size", &EmpiricalDistribution::support_size)
        .def_property_readonly("total", &EmpiricalDistribution::total)
        .def_property_readonly("denominator", &EmpiricalDistribution::denominator)
        .def_property_readonly("integer_counts", &EmpiricalDistribution::integer_counts)
        .def_property_readonly("model",
                               [](const EmpiricalDistribution& d) { return d.meta().model; })
        .def_property_readonly("params",
                               [](const EmpiricalDistribution& d) { return d.meta().params; })
        .def_property_readonly(
            "total_programs",
            [](const EmpiricalDistribution& d) { return d.meta().total_programs; })
        .def_property_readonly(
            "halting_count",
            [](const EmpiricalDistribution& d) { return d.meta().halting_count; })
        .def_property_readonly(
            "consolidated",
            [](const EmpiricalDistribution& d) { return d.meta().consolidated; })
        .def("__len__", &EmpiricalDistribution::support_size)
        .def("__repr__", [](const EmpiricalDistribution& d) {
            return "<Distribution model=" + d.meta().model +
                   " support=" + std::to_string(d.support_size()) + ">";
        });

    m.def("consolidate", [](const EmpiricalDistribution& d) { return consolidate(d); },
          py::arg("dist"), "Average counts over reverse/complement orbits");

    // strings
    m.def("shannon_entropy",
          [](const std::string& s) {
              Entropy e = shannon_entropy(to_bs(s));
              return py::make_tuple(e.value, e.degenerate);
          },
          py::arg("s"), "Bit entropy as (value, degenerate)");
    m.def("lzw_compressed_length",
          [](const std::string& s) { return lzw_compressed_length(to_bs(s)); }, py::arg("s"));

    // transducers
    m.def("fsa_distribution",
          [](std::size_t n, const std::string& scheme) {
              return fsa_distribution(n, scheme_or_throw(scheme));
          },
          py::arg("n"), py::arg("scheme") = "block-v1");
    m.def("fsa_distribution_range",
          [](std::size_t n_min, std::size_t n_max, const std::string& scheme) {
              return fsa_distribution_range(n_min, n_max, scheme_or_throw(scheme));
          },
          py::arg("n_min"), py::arg("n_max"), py::arg("scheme") = "block-v1");
    m.def("fsa_pair_count",
          [](std::size_t n, const std::string& scheme) {
              return fsa_pair_count(n, scheme_or_throw(scheme));
          },
          py::arg("n"), py::arg("scheme") = "block-v1");
    m.def("fsa_complexity",
          [](const std::string& s, const std::string& scheme) {
              ComplexityWitness w = fsa_complexity(to_bs(s), scheme_or_throw(scheme));
              py::dict d;
              d["complexity"] = w.complexity;
              d["sigma"] = w.sigma.text();
              d["p"] = w.p.text();
              return d;
          },
          py::arg("s"), py::arg("scheme") = "block-v1");
    m.def("scheme_ids", [] { return scheme_ids(); });

    // grammars
    m.def("cfg_distribution",
          [](long long limit, const std::vector<std::string>& strings) {
              return cfg_distribution(enumerate_grammars(limit), to_bs_list(strings));
          },
          py::arg("limit"), py::arg("strings"),
          "Distribution over the first `limit` grammars in canonical order");
    m.def("pairing", &pairing, py::arg("n"), py::arg("p"),
          "Class index of (nonterminals, productions)");
    m.def("pairing_inverse", &pairing_inverse, py::arg("c"));

    // machines
    m.def("tm_space_size", &tm_space_size, py::arg("states"));
    m.def("ctm_distribution",
          [](int states, std::uint64_t cutoff, const std::vector<int>& blanks,
             std::uint64_t sample, std::uint64_t seed) {
              return ctm_distribution(states, cutoff, blanks, sampler_of(sample, seed));
          },
          py::arg("states"), py::arg("cutoff"), py::arg("blanks") = std::vector<int>{0},
          py::arg("sample") = 0, py::arg("seed") = 0);
    m.def("ctm_distributions",
          [](int states, const std::vector<std::uint64_t>& cutoffs, const std::vector<int>& blanks,
             std::uint64_t sample, std::uint64_t seed, int jobs, const std::string& checkpoint) {
              if (sample > 0) {
                  if (!checkpoint.empty())
                      throw std::invalid_argument("sampled sweeps do not checkpoint");
                  return ctm_distributions(states, cutoffs, blanks, Sampler{seed, sample});
              }
              if (jobs > 1 || !checkpoint.empty()) {
                  TmRunConfig rc;
                  rc.states = states;
                  rc.cutoffs = cutoffs;
                  rc.blanks = blanks;
                  rc.jobs = jobs;
                  rc.checkpoint_dir = checkpoint;
                  return run_tm_sweep(rc);
              }
              return ctm_distributions(states, cutoffs, blanks);
          },
          py::arg("states"), py::arg("cutoffs"), py::arg("blanks") = std::vector<int>{0},
          py::arg("sample") = 0, py::arg("seed") = 0, py::arg("jobs") = 1,
          py::arg("checkpoint") = "");
    m.def("nonhalting_tm_distribution",
          [](int states, std::uint64_t steps, const std::vector<int>& blanks,
             std::uint64_t sample, std::uint64_t seed) {
              return nonhalting_tm_distribution(states, steps, blanks, sampler_of(sample, seed));
          },
          py::arg("states"), py::arg("steps"), py::arg("blanks") = std::vector<int>{0},
          py::arg("sample") = 0, py::arg("seed") = 0);

    // cellular automata
    m.def("ca_distribution",
          [](const std::string& family, int steps, bool both_starts) {
              return ca_distribution(family_or_throw(family), steps, both_starts);
          },
          py::arg("family") = "elementary", py::arg("steps") = 12,
          py::arg("both_starts") = false);
    m.def("ca_evolve",
          [](const std::string& family, int rule, int steps, const std::string& start) {
              CaStart st;
              if (start == "one")
                  st = CaStart::OneOnZeros;
              else if (start == "zero")
                  st = CaStart::ZeroOnOnes;
              else
                  throw std::invalid_argument("start must be 'one' or 'zero'");
              auto rows = ca_evolve(CaRule{family_or_throw(family), rule}, steps, st);
              std::vector<std::string> out;
              for (const auto& r : rows) out.push_back(r.text());
              return out;
          },
          py::arg("family"), py::arg("rule"), py::arg("steps"), py::arg("start") = "one");

    // analysis
    m.def("rank_correlation",
          [](const EmpiricalDistribution& a, const EmpiricalDistribution& b,
             const std::string& method) -> py::object {
              auto v = rank_correlation(a, b, method_or_throw(method));
              return v ? py::cast(*v) : py::none();
          },
          py::arg("a"), py::arg("b"), py::arg("method") = "kendall");
    m.def("compare",
          [](const std::string& name_a, const EmpiricalDistribution& a, const std::string& name_b,
             const EmpiricalDistribution& b) { return comparison_dict(compare(name_a, a, name_b, b)); },
          py::arg("name_a"), py::arg("a"), py::arg("name_b"), py::arg("b"));
    m.def("missed_strings",
          [](const EmpiricalDistribution& weak, const EmpiricalDistribution& strong,
             std::size_t k) {
              std::vector<std::string> out;
              for (const auto& s : missed_strings(weak, strong, k)) out.push_back(s.text());
              return out;
          },
          py::arg("weak"), py::arg("strong"), py::arg("k") = 50);
    m.def("baseline_rankings",
          [](const std::vector<std::string>& strings) {
              BaselineRankings b = baseline_rankings(to_bs_list(strings));
              return py::make_tuple(std::move(b.entropy), std::move(b.lzw));
          },
          py::arg("strings"), "Entropy and LZW pseudo-rankings as (entropy, lzw)");
}
