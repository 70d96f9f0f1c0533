#include "algoprob/distribution.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace algoprob {

void EmpiricalDistribution::add(const BinaryString& s, double count) {
    if (count < 0.0) throw std::invalid_argument("EmpiricalDistribution: negative count");
    if (count == 0.0) return;
    if (integer_counts_ && count != std::floor(count)) integer_counts_ = false;
    counts_[s] += count;
}

void EmpiricalDistribution::ensure(const BinaryString& s) {
    counts_.emplace(s, 0.0);
}

double EmpiricalDistribution::count(const BinaryString& s) const {
    auto it = counts_.find(s);
    return it == counts_.end() ? 0.0 : it->second;
}

double EmpiricalDistribution::total() const {
    double t = 0.0;
    for (const auto& [s, c] : counts_) t += c;
    return t;
}

double EmpiricalDistribution::denominator() const {
    return meta_.per_program ? double(meta_.total_programs) : total();
}

std::vector<BinaryString> EmpiricalDistribution::support() const {
    std::vector<BinaryString> v;
    v.reserve(counts_.size());
    for (const auto& [s, c] : counts_) v.push_back(s);
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<DistributionRow> rows(const EmpiricalDistribution& d) {
    std::vector<DistributionRow> out;
    out.reserve(d.support_size());
    double tot = d.denominator();
    for (const auto& [s, c] : d.counts()) {
        DistributionRow r;
        r.s = s;
        r.count = c;
        r.probability = c == 0.0 ? 0.0 : c / tot;
        r.ctm = c == 0.0 ? std::numeric_limits<double>::infinity() : -std::log2(r.probability);
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const DistributionRow& a, const DistributionRow& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.s < b.s;
    });
    return out;
}

std::unordered_map<BinaryString, double> to_probability(const EmpiricalDistribution& d) {
    if (d.empty()) throw std::invalid_argument("to_probability: empty distribution");
    std::unordered_map<BinaryString, double> p;
    double tot = d.denominator();
    for (const auto& [s, c] : d.counts()) p.emplace(s, c == 0.0 ? 0.0 : c / tot);
    return p;
}

std::optional<double> ctm_complexity(const EmpiricalDistribution& d, const BinaryString& s) {
    double c = d.count(s);
    if (c <= 0.0) return std::nullopt;
    return -std::log2(c / d.denominator());
}

EmpiricalDistribution consolidate(const EmpiricalDistribution& d) {
    if (d.meta().consolidated) return d;
    EmpiricalDistribution out{d.meta()};
    out.meta().consolidated = true;
    out.mark_real();
    std::unordered_set<BinaryString> done;
    for (const auto& [s, c] : d.counts()) {
        auto orb = orbit(s);
        if (done.count(orb.front())) continue;
        double numer = d.count(s) + d.count(reverse(s)) + d.count(complement(s)) +
                       d.count(reverse(complement(s)));
        double v = numer / double(orb.size());
        for (const auto& t : orb) {
            out.ensure(t);
            out.add(t, v);
            done.insert(t);
        }
    }
    return out;
}

EmpiricalDistribution merge(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
    const auto& ma = a.meta();
    const auto& mb = b.meta();
    if (ma.model != mb.model || ma.params != mb.params || ma.scheme_id != mb.scheme_id ||
        ma.consolidated != mb.consolidated || ma.per_program != mb.per_program) {
        throw std::invalid_argument("merge: incompatible distributions (model/params/scheme/"
                                    "consolidated/per_program must agree): " +
                                    ma.model + " vs " + mb.model);
    }
    EmpiricalDistribution out{ma};
    out.meta().total_programs = ma.total_programs + mb.total_programs;
    out.meta().halting_count = ma.halting_count + mb.halting_count;
    if (!a.integer_counts() || !b.integer_counts()) out.mark_real();
    for (const auto& [s, c] : a.counts()) { out.ensure(s); out.add(s, c); }
    for (const auto& [s, c] : b.counts()) { out.ensure(s); out.add(s, c); }
    return out;
}

std::string render_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

std::string render_count(double c, bool integer_mode) {
    if (integer_mode) {
        char buf[32];
        auto res = std::to_chars(buf, buf + sizeof buf, std::uint64_t(c));
        return std::string(buf, res.ptr);
    }
    return render_double(c);
}

}  // namespace

void write_csv(const EmpiricalDistribution& d, std::ostream& os) {
    const auto& m = d.meta();
    os << "# model: " << m.model << "\n";
    if (!m.scheme_id.empty()) os << "# scheme: " << m.scheme_id << "\n";
    os << "# consolidated: " << (m.consolidated ? "true" : "false") << "\n";
    os << "# total_programs: " << m.total_programs << "\n";
    os << "# halting_count: " << m.halting_count << "\n";
    os << "# counts: " << (d.integer_counts() ? "integer" : "real") << "\n";
    if (m.per_program) os << "# denominator: programs\n";
    for (const auto& [k, v] : m.params) os << "# param." << k << ": " << v << "\n";
    os << "string,count,probability,ctm_complexity\n";
    for (const auto& r : rows(d)) {
        os << r.s.text() << ',' << render_count(r.count, d.integer_counts()) << ','
           << render_double(r.probability) << ','
           << (r.count == 0.0 ? std::string() : render_double(r.ctm)) << "\n";
    }
}

std::string to_csv(const EmpiricalDistribution& d) {
    std::ostringstream os;
    write_csv(d, os);
    return os.str();
}

EmpiricalDistribution read_csv(std::istream& is) {
    DistributionMeta meta;
    bool integer_mode = true;
    std::vector<std::pair<BinaryString, double>> entries;
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto colon = line.find(": ");
            if (colon == std::string::npos) throw std::invalid_argument("csv: bad meta line: " + line);
            std::string key = line.substr(2, colon - 2);
            std::string val = line.substr(colon + 2);
            if (key == "model") meta.model = val;
            else if (key == "scheme") meta.scheme_id = val;
            else if (key == "consolidated") meta.consolidated = (val == "true");
            else if (key == "total_programs") meta.total_programs = std::stoull(val);
            else if (key == "halting_count") meta.halting_count = std::stoull(val);
            else if (key == "counts") integer_mode = (val == "integer");
            else if (key == "denominator") meta.per_program = (val == "programs");
            else if (key.rfind("param.", 0) == 0) meta.params[key.substr(6)] = val;
            else throw std::invalid_argument("csv: unknown meta key: " + key);
            continue;
        }
        if (!header_seen) {
            if (line != "string,count,probability,ctm_complexity")
                throw std::invalid_argument("csv: unexpected header: " + line);
            header_seen = true;
            continue;
        }
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("csv: bad row: " + line);
        BinaryString s = BinaryString::from_text(line.substr(0, c1));
        double count = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        entries.emplace_back(std::move(s), count);
    }
    if (!header_seen) throw std::invalid_argument("csv: missing header");
    EmpiricalDistribution d{std::move(meta)};
    if (!integer_mode) d.mark_real();
    for (auto& [s, c] : entries) {
        d.ensure(s);
        d.add(s, c);
    }
    return d;
}

void write_json(const EmpiricalDistribution& d, std::ostream& os) {
    nlohmann::ordered_json j;
    const auto& m = d.meta();
    j["meta"]["model"] = m.model;
    if (!m.scheme_id.empty()) j["meta"]["scheme"] = m.scheme_id;
    j["meta"]["consolidated"] = m.consolidated;
    j["meta"]["total_programs"] = m.total_programs;
    j["meta"]["halting_count"] = m.halting_count;
    j["meta"]["counts"] = d.integer_counts() ? "integer" : "real";
    j["meta"]["denominator"] = m.per_program ? "programs" : "sum";
    j["meta"]["params"] = m.params;
    auto rws = nlohmann::ordered_json::array();
    for (const auto& r : rows(d)) {
        nlohmann::ordered_json row;
        row["string"] = r.s.text();
        if (d.integer_counts()) row["count"] = std::uint64_t(r.count);
        else row["count"] = r.count;
        row["probability"] = r.probability;
        if (r.count == 0.0) row["ctm_complexity"] = nullptr;
        else row["ctm_complexity"] = r.ctm;
        rws.push_back(std::move(row));
    }
    j["rows"] = std::move(rws);
    os << j.dump(2) << "\n";
}

std::string to_json(const EmpiricalDistribution& d) {
    std::ostringstream os;
    write_json(d, os);
    return os.str();
}

EmpiricalDistribution read_json(std::istream& is) {
    nlohmann::json j;
    is >> j;
    DistributionMeta meta;
    const auto& jm = j.at("meta");
    meta.model = jm.at("model").get<std::string>();
    if (jm.contains("scheme")) meta.scheme_id = jm.at("scheme").get<std::string>();
    meta.consolidated = jm.at("consolidated").get<bool>();
    meta.total_programs = jm.at("total_programs").get<std::uint64_t>();
    meta.halting_count = jm.at("halting_count").get<std::uint64_t>();
    for (const auto& [k, v] : jm.at("params").items()) meta.params[k] = v.get<std::string>();
    if (jm.contains("denominator"))
        meta.per_program = jm.at("denominator").get<std::string>() == "programs";
    bool integer_mode = jm.at("counts").get<std::string>() == "integer";
    EmpiricalDistribution d{std::move(meta)};
    if (!integer_mode) d.mark_real();
    for (const auto& row : j.at("rows")) {
        BinaryString s = BinaryString::from_text(row.at("string").get<std::string>());
        d.ensure(s);
        d.add(s, row.at("count").get<double>());
    }
    return d;
}

}  // namespace algoprob
