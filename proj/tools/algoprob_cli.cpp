// algoprob: enumerate small models of computation, tabulate their output
// distributions, and compare the resulting complexity rankings.
//
// Every artifact written here carries a tool_version and a config hash in
// its meta lines, so two files produced by the same command line can be
// diffed byte for byte. Worker count, checkpoint directory and output path
// never enter the hash: they change how a result is computed, not what it is.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "algoprob/analysis.hpp"
#include "algoprob/cellular.hpp"
#include "algoprob/distribution.hpp"
#include "algoprob/fsa.hpp"
#include "algoprob/grammar.hpp"
#include "algoprob/runner.hpp"
#include "algoprob/strings.hpp"
#include "algoprob/transducer.hpp"
#include "algoprob/turing.hpp"

namespace {

using namespace algoprob;

constexpr const char* kToolVersion = "1.0.0";

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(std::string_view s) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(s)));
    return buf;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Input files enter the config hash by content, not by path, so renaming or
// moving an input does not disguise a changed experiment.
std::string content_hash(const std::string& path) { return hash_hex(slurp(path)); }

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

// Options shared by every subcommand. jobs/checkpoint only matter to tm-dist;
// the rest steer where and how results are written.
struct GlobalOpts {
    int jobs = 1;
    std::uint64_t seed = 0;
    std::string checkpoint;
    std::string out;
    std::string format = "csv";
};

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    auto parent = std::filesystem::path(out_path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + out_path);
    os << text;
    if (!os) throw std::runtime_error("write failed: " + out_path);
}

// "dir/tm4.csv" + "c107" -> "dir/tm4-c107.csv". Used when one command emits
// several artifacts.
std::string derived_out(const std::string& out_path, const std::string& tag) {
    if (out_path.empty()) return out_path;
    std::filesystem::path p(out_path);
    auto ext = p.extension().string();
    auto base = p.parent_path() / p.stem();
    return base.string() + "-" + tag + ext;
}

void stamp(EmpiricalDistribution& d, const std::string& config) {
    d.meta().params["tool_version"] = kToolVersion;
    d.meta().params["config"] = hash_hex(config);
}

void emit_distribution(EmpiricalDistribution d, const GlobalOpts& g, const std::string& config,
                       const std::string& out_path) {
    stamp(d, config);
    write_text(out_path, g.format == "json" ? to_json(d) : to_csv(d));
}

std::string provenance_comment(const std::string& config) {
    return std::string("# tool_version: ") + kToolVersion + "\n# config: " + hash_hex(config) +
           "\n";
}

EmpiricalDistribution load_distribution(const std::string& path) {
    std::string text = slurp(path);
    auto first = text.find_first_not_of(" \t\r\n");
    std::istringstream is(text);
    if (first != std::string::npos && text[first] == '{') return read_json(is);
    return read_csv(is);
}

// One string per line; "eps" names the empty string, '#' starts a comment.
std::vector<BinaryString> load_strings(const std::string& path) {
    std::istringstream is(slurp(path));
    std::vector<BinaryString> out;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(BinaryString::from_text(line));
    }
    if (out.empty()) throw std::runtime_error("no strings in " + path);
    return out;
}

// Every nonempty string of at most max_len bits, shortest first, numeric
// order within a length.
std::vector<BinaryString> strings_up_to(std::size_t max_len) {
    std::vector<BinaryString> out;
    for (std::size_t len = 1; len <= max_len; ++len)
        for (std::uint64_t v = 0; v < (std::uint64_t(1) << len); ++v)
            out.push_back(BinaryString::from_packed(v, len));
    return out;
}

std::vector<int> parse_blanks(const std::string& blanks) {
    std::vector<int> out;
    for (char c : blanks) {
        if (c != '0' && c != '1') throw std::runtime_error("blanks must be a string of 0/1 digits");
        out.push_back(c - '0');
    }
    if (out.empty()) throw std::runtime_error("blanks must name at least one symbol");
    return out;
}

std::string join_u64(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string opt_cell(const std::optional<double>& v) {
    return v ? render_double(*v) : std::string();
}

nlohmann::json opt_json(const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

// ---------------------------------------------------------------------------
// model distributions

void cmd_fsa_dist(const GlobalOpts& g, int n, int n_min, const std::string& scheme_id) {
    const EncodingScheme* scheme = find_scheme(scheme_id);
    if (!scheme) throw std::runtime_error("unknown scheme: " + scheme_id);
    int lo = n_min > 0 ? n_min : n;
    if (lo > n) throw std::runtime_error("--n-min must not exceed --n");
    std::string config = "fsa-dist n=" + std::to_string(n) + " n_min=" + std::to_string(lo) +
                         " scheme=" + scheme_id;
    EmpiricalDistribution d = lo == n ? fsa_distribution(std::size_t(n), *scheme)
                                      : fsa_distribution_range(std::size_t(lo), std::size_t(n), *scheme);
    emit_distribution(std::move(d), g, config, g.out);
}

void cmd_fsa_complexity(const GlobalOpts& g, int max_string_len, const std::string& scheme_id) {
    const EncodingScheme* scheme = find_scheme(scheme_id);
    if (!scheme) throw std::runtime_error("unknown scheme: " + scheme_id);
    std::string config = "fsa-complexity max_string_len=" + std::to_string(max_string_len) +
                         " scheme=" + scheme_id;
    std::ostringstream os;
    os << provenance_comment(config);
    write_complexity_csv(std::size_t(max_string_len), os, *scheme);
    write_text(g.out, os.str());
}

void cmd_cfg_gen(const GlobalOpts& g, long long limit) {
    std::string config = "cfg-gen limit=" + std::to_string(limit);
    auto grammars = enumerate_grammars(limit);
    std::ostringstream os;
    os << provenance_comment(config);
    write_grammar_csv(grammars, os);
    write_text(g.out, os.str());
}

void cmd_cfg_dist(const GlobalOpts& g, const std::string& grammars_path,
                  const std::string& strings_path, int max_len) {
    if (strings_path.empty() == (max_len <= 0))
        throw std::runtime_error("pass exactly one of --strings and --max-len");
    std::istringstream gs(slurp(grammars_path));
    auto grammars = read_grammar_csv(gs);
    std::vector<BinaryString> strings;
    std::string strings_tag;
    if (!strings_path.empty()) {
        strings = load_strings(strings_path);
        strings_tag = content_hash(strings_path);
    } else {
        strings = strings_up_to(std::size_t(max_len));
        strings_tag = "len:" + std::to_string(max_len);
    }
    std::string config =
        "cfg-dist grammars=" + content_hash(grammars_path) + " strings=" + strings_tag;
    emit_distribution(cfg_distribution(grammars, strings), g, config, g.out);
}

void cmd_tm_dist(const GlobalOpts& g, int states, std::vector<std::uint64_t> cutoffs,
                 const std::string& blanks, std::uint64_t sample) {
    auto blank_list = parse_blanks(blanks);
    if (cutoffs.empty()) cutoffs.push_back(107);
    std::string config = "tm-dist states=" + std::to_string(states) +
                         " cutoffs=" + join_u64(cutoffs) + " blanks=" + blanks;
    std::vector<EmpiricalDistribution> dists;
    if (sample > 0) {
        if (!g.checkpoint.empty())
            throw std::runtime_error("sampled sweeps do not checkpoint; drop --checkpoint");
        config += " sample=" + std::to_string(sample) + " seed=" + std::to_string(g.seed);
        dists = ctm_distributions(states, cutoffs, blank_list, Sampler{g.seed, sample});
    } else if (!g.checkpoint.empty() || g.jobs > 1) {
        TmRunConfig rc;
        rc.states = states;
        rc.cutoffs = cutoffs;
        rc.blanks = blank_list;
        rc.jobs = g.jobs;
        rc.checkpoint_dir = g.checkpoint;
        dists = run_tm_sweep(rc);
    } else {
        dists = ctm_distributions(states, cutoffs, blank_list);
    }
    for (std::size_t i = 0; i < dists.size(); ++i) {
        std::string out = cutoffs.size() == 1
                              ? g.out
                              : derived_out(g.out, "c" + std::to_string(cutoffs[i]));
        emit_distribution(std::move(dists[i]), g, config, out);
    }
}

void cmd_tm_nonhalting(const GlobalOpts& g, int states, std::uint64_t steps,
                       const std::string& blanks, std::uint64_t sample) {
    auto blank_list = parse_blanks(blanks);
    std::string config = "tm-nonhalting states=" + std::to_string(states) +
                         " steps=" + std::to_string(steps) + " blanks=" + blanks;
    std::optional<Sampler> sampler;
    if (sample > 0) {
        config += " sample=" + std::to_string(sample) + " seed=" + std::to_string(g.seed);
        sampler = Sampler{g.seed, sample};
    }
    emit_distribution(nonhalting_tm_distribution(states, steps, blank_list, sampler), g, config,
                      g.out);
}

void cmd_ca_dist(const GlobalOpts& g, const std::string& family, int steps,
                 const std::string& initial) {
    CaFamily fam = family == "general" ? CaFamily::General : CaFamily::Elementary;
    bool both = initial == "both";
    std::string config = "ca-dist family=" + family + " steps=" + std::to_string(steps) +
                         " initial=" + initial;
    emit_distribution(ca_distribution(fam, steps, both), g, config, g.out);
}

// ---------------------------------------------------------------------------
// post-processing

void cmd_consolidate(const GlobalOpts& g, const std::string& in_path) {
    std::string config = "consolidate in=" + content_hash(in_path);
    emit_distribution(consolidate(load_distribution(in_path)), g, config, g.out);
}

struct LoadedDists {
    std::vector<std::string> names;
    std::vector<EmpiricalDistribution> dists;
};

LoadedDists load_many(const std::vector<std::string>& paths) {
    LoadedDists out;
    for (const auto& p : paths) {
        out.names.push_back(stem_of(p));
        out.dists.push_back(load_distribution(p));
    }
    return out;
}

std::string joined_hashes(const std::vector<std::string>& paths) {
    std::string s;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (i) s += ',';
        s += content_hash(paths[i]);
    }
    return s;
}

void cmd_compare(const GlobalOpts& g, const std::string& ref_path,
                 const std::vector<std::string>& dist_paths, const std::string& method) {
    EmpiricalDistribution ref = load_distribution(ref_path);
    LoadedDists rest = load_many(dist_paths);
    std::vector<NamedDistribution> named;
    for (std::size_t i = 0; i < rest.dists.size(); ++i)
        named.push_back({rest.names[i], &rest.dists[i]});
    auto grid = compare_matrix(named, {stem_of(ref_path), &ref});
    std::string config = "compare ref=" + content_hash(ref_path) +
                         " dists=" + joined_hashes(dist_paths) + " method=" + method;

    std::vector<std::string> all_names{stem_of(ref_path)};
    all_names.insert(all_names.end(), rest.names.begin(), rest.names.end());

    if (g.format == "json") {
        nlohmann::json j;
        j["tool_version"] = kToolVersion;
        j["config"] = hash_hex(config);
        j["method"] = method;
        j["models"] = all_names;
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& row : grid) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& c : row) {
                if (method == "all") {
                    r.push_back({{"shared_support", c.shared_support.size()},
                                 {"kendall", opt_json(c.kendall)},
                                 {"spearman", opt_json(c.spearman)},
                                 {"pearson", opt_json(c.pearson)}});
                } else {
                    const auto& v = method == "spearman" ? c.spearman
                                    : method == "pearson" ? c.pearson
                                                          : c.kendall;
                    r.push_back(opt_json(v));
                }
            }
            cells.push_back(std::move(r));
        }
        j["matrix"] = std::move(cells);
        write_text(g.out, j.dump(2) + "\n");
        return;
    }

    std::ostringstream os;
    os << provenance_comment(config);
    if (method == "all") {
        os << "model_a,model_b,shared_support,kendall,spearman,pearson\n";
        for (const auto& row : grid)
            for (const auto& c : row)
                os << c.model_a << ',' << c.model_b << ',' << c.shared_support.size() << ','
                   << opt_cell(c.kendall) << ',' << opt_cell(c.spearman) << ','
                   << opt_cell(c.pearson) << "\n";
    } else {
        os << "# method: " << method << "\nmodel";
        for (const auto& n : all_names) os << ',' << n;
        os << "\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            os << all_names[i];
            for (const auto& c : grid[i]) {
                const auto& v = method == "spearman" ? c.spearman
                                : method == "pearson" ? c.pearson
                                                      : c.kendall;
                os << ',' << opt_cell(v);
            }
            os << "\n";
        }
    }
    write_text(g.out, os.str());
}

void cmd_missed(const GlobalOpts& g, const std::string& weak_path, const std::string& strong_path,
                int k) {
    EmpiricalDistribution weak = load_distribution(weak_path);
    EmpiricalDistribution strong = load_distribution(strong_path);
    auto missed = missed_strings(weak, strong, std::size_t(k));
    std::string config = "missed weak=" + content_hash(weak_path) +
                         " strong=" + content_hash(strong_path) + " k=" + std::to_string(k);
    if (g.format == "json") {
        nlohmann::json j;
        j["tool_version"] = kToolVersion;
        j["config"] = hash_hex(config);
        j["weak"] = stem_of(weak_path);
        j["strong"] = stem_of(strong_path);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : missed) {
            arr.push_back({{"string", s.empty() ? "eps" : s.text()},
                           {"strong_count", strong.count(s)},
                           {"strong_ctm", opt_json(ctm_complexity(strong, s))}});
        }
        j["missed"] = std::move(arr);
        write_text(g.out, j.dump(2) + "\n");
        return;
    }
    std::ostringstream os;
    os << provenance_comment(config);
    os << "string,strong_count,strong_ctm\n";
    for (const auto& s : missed) {
        auto ctm = ctm_complexity(strong, s);
        double c = strong.count(s);
        os << (s.empty() ? "eps" : s.text()) << ','
           << (strong.integer_counts() ? std::to_string(static_cast<long long>(c))
                                       : render_double(c))
           << ',' << (ctm ? render_double(*ctm) : std::string()) << "\n";
    }
    write_text(g.out, os.str());
}

void cmd_baselines(const GlobalOpts& g, const std::string& strings_path, int max_len,
                   const std::string& support_of) {
    int sources = (!strings_path.empty()) + (max_len > 0) + (!support_of.empty());
    if (sources != 1)
        throw std::runtime_error("pass exactly one of --strings, --max-len, --support-of");
    std::vector<BinaryString> strings;
    std::string tag;
    if (!strings_path.empty()) {
        strings = load_strings(strings_path);
        tag = "strings=" + content_hash(strings_path);
    } else if (max_len > 0) {
        strings = strings_up_to(std::size_t(max_len));
        tag = "max_len=" + std::to_string(max_len);
    } else {
        EmpiricalDistribution d = load_distribution(support_of);
        for (const auto& s : d.support())
            if (d.count(s) > 0) strings.push_back(s);
        tag = "support_of=" + content_hash(support_of);
    }
    std::string config = "baselines " + tag;
    BaselineRankings b = baseline_rankings(strings);
    emit_distribution(std::move(b.entropy), g, config, derived_out(g.out, "entropy"));
    emit_distribution(std::move(b.lzw), g, config, derived_out(g.out, "lzw"));
}

void cmd_table1(const GlobalOpts& g, const std::vector<std::string>& dist_paths, int max_len,
                bool consolidate_first) {
    LoadedDists in = load_many(dist_paths);
    std::string config = "table1 dists=" + joined_hashes(dist_paths) +
                         " max_len=" + std::to_string(max_len) +
                         " consolidate=" + (consolidate_first ? "1" : "0");
    std::vector<std::uint64_t> counts;
    for (auto& d : in.dists) {
        if (consolidate_first) d = consolidate(d);
        std::uint64_t n = 0;
        for (const auto& s : d.support())
            if (s.size() <= std::size_t(max_len) && d.count(s) > 0) ++n;
        counts.push_back(n);
    }
    if (g.format == "json") {
        nlohmann::json j;
        j["tool_version"] = kToolVersion;
        j["config"] = hash_hex(config);
        j["max_len"] = max_len;
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < counts.size(); ++i)
            arr.push_back({{"model", in.names[i]}, {"distinct_strings", counts[i]}});
        j["rows"] = std::move(arr);
        write_text(g.out, j.dump(2) + "\n");
        return;
    }
    std::ostringstream os;
    os << provenance_comment(config);
    os << "model,distinct_strings\n";
    for (std::size_t i = 0; i < counts.size(); ++i)
        os << in.names[i] << ',' << counts[i] << "\n";
    write_text(g.out, os.str());
}

void cmd_convergence(const GlobalOpts& g, const std::string& ref_path,
                     const std::vector<std::string>& dist_paths, bool with_baselines) {
    EmpiricalDistribution ref = load_distribution(ref_path);
    std::string ref_name = stem_of(ref_path);
    LoadedDists rest = load_many(dist_paths);
    std::string config = "convergence ref=" + content_hash(ref_path) +
                         " dists=" + joined_hashes(dist_paths) +
                         " baselines=" + (with_baselines ? "1" : "0");

    std::vector<RankComparison> rows;
    for (std::size_t i = 0; i < rest.dists.size(); ++i)
        rows.push_back(compare(rest.names[i], rest.dists[i], ref_name, ref));
    if (with_baselines) {
        std::vector<BinaryString> produced;
        for (const auto& s : ref.support())
            if (ref.count(s) > 0) produced.push_back(s);
        BaselineRankings b = baseline_rankings(produced);
        rows.push_back(compare("baseline-entropy", b.entropy, ref_name, ref));
        rows.push_back(compare("baseline-lzw", b.lzw, ref_name, ref));
    }

    if (g.format == "json") {
        nlohmann::json j;
        j["tool_version"] = kToolVersion;
        j["config"] = hash_hex(config);
        j["reference"] = ref_name;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"model", r.model_a},
                           {"shared_support", r.shared_support.size()},
                           {"kendall", opt_json(r.kendall)},
                           {"spearman", opt_json(r.spearman)},
                           {"pearson", opt_json(r.pearson)}});
        j["rows"] = std::move(arr);
        write_text(g.out, j.dump(2) + "\n");
        return;
    }
    std::ostringstream os;
    os << provenance_comment(config);
    os << "# reference: " << ref_name << "\n";
    os << "model,shared_support,kendall,spearman,pearson\n";
    for (const auto& r : rows)
        os << r.model_a << ',' << r.shared_support.size() << ',' << opt_cell(r.kendall) << ','
           << opt_cell(r.spearman) << ',' << opt_cell(r.pearson) << "\n";
    write_text(g.out, os.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Output distributions of small computational models and their rank agreement"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--jobs", g.jobs, "worker threads for tm-dist")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "RNG seed for sampled sweeps");
    app.add_option("--checkpoint", g.checkpoint, "checkpoint directory for tm-dist");
    app.add_option("--out", g.out, "output file (stdout when omitted)");
    app.add_option("--format", g.format, "artifact format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.set_version_flag("--version", kToolVersion);

    // fsa-dist
    auto* fsa_dist = app.add_subcommand("fsa-dist", "Transducer output distribution at size n");
    fsa_dist->fallthrough();
    int fsa_n = 8, fsa_n_min = 0;
    std::string fsa_scheme = "block-v1";
    fsa_dist->add_option("--n", fsa_n, "total description bits")->required()->check(CLI::Range(8, 22));
    fsa_dist->add_option("--n-min", fsa_n_min, "aggregate from this size up to --n");
    fsa_dist->add_option("--scheme", fsa_scheme, "transducer encoding scheme");
    fsa_dist->callback([&] { cmd_fsa_dist(g, fsa_n, fsa_n_min, fsa_scheme); });

    // fsa-complexity
    auto* fsa_cx = app.add_subcommand("fsa-complexity", "Shortest-description complexity table");
    fsa_cx->fallthrough();
    int fsa_cx_len = 8;
    std::string fsa_cx_scheme = "block-v1";
    fsa_cx->add_option("--max-string-len", fsa_cx_len, "longest string to tabulate")
        ->required()
        ->check(CLI::Range(0, 12));
    fsa_cx->add_option("--scheme", fsa_cx_scheme, "transducer encoding scheme");
    fsa_cx->callback([&] { cmd_fsa_complexity(g, fsa_cx_len, fsa_cx_scheme); });

    // cfg-gen
    auto* cfg_gen = app.add_subcommand("cfg-gen", "Enumerate CNF grammars in canonical order");
    cfg_gen->fallthrough();
    long long cfg_limit = 40000;
    cfg_gen->add_option("--limit", cfg_limit, "number of grammars")->required()->check(CLI::PositiveNumber);
    cfg_gen->callback([&] { cmd_cfg_gen(g, cfg_limit); });

    // cfg-dist
    auto* cfg_dist = app.add_subcommand("cfg-dist", "How many grammars generate each string");
    cfg_dist->fallthrough();
    std::string cfg_grammars, cfg_strings;
    int cfg_max_len = 0;
    cfg_dist->add_option("--grammars", cfg_grammars, "grammar CSV from cfg-gen")->required();
    cfg_dist->add_option("--strings", cfg_strings, "query strings, one per line");
    cfg_dist->add_option("--max-len", cfg_max_len, "query all strings up to this length");
    cfg_dist->callback([&] { cmd_cfg_dist(g, cfg_grammars, cfg_strings, cfg_max_len); });

    // tm-dist
    auto* tm_dist = app.add_subcommand("tm-dist", "Halting-output distribution of (n,2) machines");
    tm_dist->fallthrough();
    int tm_states = 4;
    std::vector<std::uint64_t> tm_cutoffs;
    std::string tm_blanks = "01";
    std::uint64_t tm_sample = 0;
    tm_dist->add_option("--states", tm_states, "machine states")->check(CLI::Range(1, 4));
    tm_dist->add_option("--cutoff", tm_cutoffs, "step budget, repeatable for nested sweeps");
    tm_dist->add_option("--blanks", tm_blanks, "blank symbols to average over, e.g. 01");
    tm_dist->add_option("--sample", tm_sample, "sample this many machines instead of all");
    tm_dist->callback([&] { cmd_tm_dist(g, tm_states, tm_cutoffs, tm_blanks, tm_sample); });

    // tm-nonhalting
    auto* tm_nh = app.add_subcommand("tm-nonhalting", "Tape snapshots of never-halting machines");
    tm_nh->fallthrough();
    int nh_states = 2;
    std::uint64_t nh_steps = 107, nh_sample = 0;
    std::string nh_blanks = "01";
    tm_nh->add_option("--states", nh_states, "machine states")->check(CLI::Range(1, 3));
    tm_nh->add_option("--steps", nh_steps, "steps to run before the snapshot");
    tm_nh->add_option("--blanks", nh_blanks, "blank symbols to average over");
    tm_nh->add_option("--sample", nh_sample, "sample this many machines instead of all");
    tm_nh->callback([&] { cmd_tm_nonhalting(g, nh_states, nh_steps, nh_blanks, nh_sample); });

    // ca-dist
    auto* ca = app.add_subcommand("ca-dist", "Windowed row distribution of cellular automata");
    ca->fallthrough();
    std::string ca_family = "elementary", ca_initial = "one";
    int ca_steps = 12;
    ca->add_option("--family", ca_family, "rule family")
        ->check(CLI::IsMember({"elementary", "general"}));
    ca->add_option("--steps", ca_steps, "rows to evolve")->check(CLI::Range(1, 64));
    ca->add_option("--initial", ca_initial, "single 1 on 0s, or both polarities")
        ->check(CLI::IsMember({"one", "both"}));
    ca->callback([&] { cmd_ca_dist(g, ca_family, ca_steps, ca_initial); });

    // consolidate
    auto* cons = app.add_subcommand("consolidate", "Average counts over reverse/complement orbits");
    cons->fallthrough();
    std::string cons_in;
    cons->add_option("--in", cons_in, "distribution artifact (csv or json)")->required();
    cons->callback([&] { cmd_consolidate(g, cons_in); });

    // compare
    auto* cmp = app.add_subcommand("compare", "Pairwise rank correlation matrix");
    cmp->fallthrough();
    std::string cmp_ref, cmp_method = "all";
    std::vector<std::string> cmp_dists;
    cmp->add_option("--ref", cmp_ref, "reference distribution artifact")->required();
    cmp->add_option("--dists", cmp_dists, "distribution artifacts to compare")
        ->required()
        ->expected(-1);
    cmp->add_option("--method", cmp_method, "correlation to tabulate")
        ->check(CLI::IsMember({"kendall", "spearman", "pearson", "all"}));
    cmp->callback([&] { cmd_compare(g, cmp_ref, cmp_dists, cmp_method); });

    // missed
    auto* missed = app.add_subcommand("missed", "Strings a stronger model produced that a weaker one never did");
    missed->fallthrough();
    std::string missed_weak, missed_strong;
    int missed_k = 50;
    missed->add_option("--weak", missed_weak, "weaker model's distribution")->required();
    missed->add_option("--strong", missed_strong, "stronger model's distribution")->required();
    missed->add_option("-k,--k", missed_k, "strings to report")->check(CLI::PositiveNumber);
    missed->callback([&] { cmd_missed(g, missed_weak, missed_strong, missed_k); });

    // baselines
    auto* base = app.add_subcommand("baselines", "Entropy and LZW pseudo-rankings over a string set");
    base->fallthrough();
    std::string base_strings, base_support;
    int base_max_len = 0;
    base->add_option("--strings", base_strings, "strings, one per line");
    base->add_option("--max-len", base_max_len, "all strings up to this length");
    base->add_option("--support-of", base_support, "strings a distribution artifact produced");
    base->callback([&] { cmd_baselines(g, base_strings, base_max_len, base_support); });

    // table1
    auto* t1 = app.add_subcommand("table1", "Distinct short strings per model");
    t1->fallthrough();
    std::vector<std::string> t1_dists;
    int t1_max_len = 12;
    bool t1_consolidate = false;
    t1->add_option("--dists", t1_dists, "distribution artifacts, one row each")
        ->required()
        ->expected(-1);
    t1->add_option("--max-len", t1_max_len, "count strings up to this length")->check(CLI::Range(1, 64));
    t1->add_flag("--consolidate", t1_consolidate, "consolidate before counting");
    t1->callback([&] { cmd_table1(g, t1_dists, t1_max_len, t1_consolidate); });

    // convergence
    auto* conv = app.add_subcommand("convergence", "Rank agreement of each model with a reference");
    conv->fallthrough();
    std::string conv_ref;
    std::vector<std::string> conv_dists;
    bool conv_base = false;
    conv->add_option("--ref", conv_ref, "reference distribution artifact")->required();
    conv->add_option("--dists", conv_dists, "distribution artifacts to rank against it")
        ->required()
        ->expected(-1);
    conv->add_flag("--baselines", conv_base, "append entropy and LZW baseline rows");
    conv->callback([&] { cmd_convergence(g, conv_ref, conv_dists, conv_base); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
