#include "ribbon/commands.hpp"

#include <json.hpp>
#include <sstream>

#include "ribbon/cyclotomic.hpp"
#include "ribbon/json_io.hpp"
#include "ribbon/render.hpp"
#include "ribbon/symfunc.hpp"
#include "ribbon/tableaux.hpp"
#include "ribbon/verify.hpp"

namespace ribbon::cli {

using nlohmann::json;

namespace {

CommandResult usage_error(const std::string& message) {
    return {2, "error: " + message + "\n"};
}

std::string ordinal(int k) {
    int mod100 = k % 100;
    if (mod100 >= 11 && mod100 <= 13) return std::to_string(k) + "th";
    switch (k % 10) {
        case 1: return std::to_string(k) + "st";
        case 2: return std::to_string(k) + "nd";
        case 3: return std::to_string(k) + "rd";
        default: return std::to_string(k) + "th";
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

CommandResult cmd_core_quotient(const std::string& partition, int k, Format format) {
    Partition p;
    try {
        p = Partition::parse(partition);
        if (k < 1) throw std::invalid_argument("k must be positive");
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    Partition core = k_core(p, k);
    PartitionTuple quotient = k_quotient(p, k);
    if (format == Format::json) {
        json j{{"partition", to_json(p)},
               {"k", k},
               {"core", to_json(core)},
               {"quotient", to_json(quotient)}};
        return {0, dump(j)};
    }
    std::ostringstream out;
    out << "partition: " << p.display() << "\n";
    out << "k: " << k << "\n";
    out << "core: " << core.display() << "\n";
    out << "quotient: " << quotient.display() << "\n";
    return {0, out.str()};
}

CommandResult cmd_fakedeg(const std::string& partition, std::optional<int> k, Format format) {
    Partition p;
    try {
        p = Partition::parse(partition);
        if (k && *k < 1) throw std::invalid_argument("k must be positive");
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    BiPoly fake = fake_degree(p);
    json j{{"partition", to_json(p)}, {"fake_degree", to_json(fake)}};
    std::ostringstream out;
    out << "partition: " << p.display() << "\n";
    out << "f(q,t) = " << fake.to_string() << "\n";
    int exit_code = 0;
    if (k) {
        CycPolyT at_root = eval_at_root(fake, *k);
        auto reduced = as_integer_poly(at_root);
        bool core_empty = k_core(p, *k).empty();
        out << "k: " << *k << "\n";
        j["k"] = *k;
        if (reduced) {
            out << "f(xi,t) = " << reduced->to_string("t") << "  (xi a primitive " << ordinal(*k)
                << " root of unity)\n";
            out << "integral: yes\n";
            j["evaluation"] = to_json(*reduced);
            j["integral"] = true;
        } else {
            out << "integral: no\n";
            j["integral"] = false;
        }
        if (core_empty) {
            int epsilon = bst_sign(p, *k);
            IntPoly rhs = bst_stat_polynomial(p, *k);
            bool match = reduced && *reduced == rhs;
            out << "epsilon: " << (epsilon > 0 ? "+1" : "-1") << "\n";
            out << "bst side = " << rhs.to_string("t") << "\n";
            out << "verdict: " << (match ? "MATCH" : "MISMATCH") << "\n";
            j["epsilon"] = epsilon;
            j["bst_side"] = to_json(rhs);
            j["verdict"] = match ? "match" : "mismatch";
            if (!match) exit_code = 1;
        } else {
            out << "verdict: N/A (" << *k << "-core " << k_core(p, *k).display()
                << " not empty, no combinatorial interpretation)\n";
            j["verdict"] = "no combinatorial interpretation";
        }
    }
    return {exit_code, format == Format::json ? dump(j) : out.str()};
}

CommandResult cmd_bst(const std::string& partition, int k, const std::string& mode, Format format) {
    Partition p;
    try {
        p = Partition::parse(partition);
        if (k < 1) throw std::invalid_argument("k must be positive");
        if (mode != "list" && mode != "count" && mode != "stats")
            throw std::invalid_argument("mode must be list, count or stats");
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    if (mode == "count") {
        long long count = count_bst(p, k);
        if (format == Format::json)
            return {0, dump(json{{"partition", to_json(p)}, {"k", k}, {"count", count}})};
        std::ostringstream out;
        out << "partition: " << p.display() << "\n";
        out << "k: " << k << "\n";
        out << "count: " << count << "\n";
        return {0, out.str()};
    }
    auto tableaux = all_bst(p, k);
    std::ostringstream out;
    json j{{"partition", to_json(p)}, {"k", k}, {"count", tableaux.size()}};
    out << "partition: " << p.display() << "\n";
    out << "k: " << k << "\n";
    out << "count: " << tableaux.size() << "\n";
    if (mode == "stats") {
        std::vector<int> stats;
        for (const auto& b : tableaux) stats.push_back(bst_stat(b));
        std::sort(stats.begin(), stats.end());
        json stats_json = json::array();
        out << "stats:";
        for (std::size_t i = 0; i < stats.size(); ++i) {
            out << (i ? "," : " ") << stats[i];
            stats_json.push_back(stats[i]);
        }
        out << "\n";
        j["stats"] = stats_json;
        if (!tableaux.empty()) {
            int epsilon = bst_sign(p, k);
            out << "epsilon: " << (epsilon > 0 ? "+1" : "-1") << "\n";
            out << "stat polynomial = " << bst_stat_polynomial(p, k).to_string("t") << "\n";
            j["epsilon"] = epsilon;
            j["stat_polynomial"] = to_json(bst_stat_polynomial(p, k));
        }
        return {0, format == Format::json ? dump(j) : out.str()};
    }
    // list mode
    json list = json::array();
    for (std::size_t i = 0; i < tableaux.size(); ++i) {
        const auto& b = tableaux[i];
        DescentData d = descents(b);
        json entry = to_json(b);
        entry["descents"] = d.descents;
        entry["maj"] = d.maj;
        entry["height"] = b.height();
        entry["stat"] = bst_stat(b);
        list.push_back(entry);
        out << "tableau " << i + 1 << ": DES={";
        for (std::size_t a = 0; a < d.descents.size(); ++a)
            out << (a ? "," : "") << d.descents[a];
        out << "} maj=" << d.maj << " height=" << b.height() << " stat=" << bst_stat(b) << "\n";
        out << render_bst(b);
    }
    j["tableaux"] = list;
    return {0, format == Format::json ? dump(j) : out.str()};
}

CommandResult cmd_character(const std::string& partition, const std::string& rho, Format format) {
    Partition p, type;
    try {
        p = Partition::parse(partition);
        type = Partition::parse(rho);
        if (p.size() != type.size())
            throw std::invalid_argument("partition and rho must have the same size");
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    Int chi = mn_character(p, type);
    if (format == Format::json)
        return {0, dump(json{{"partition", to_json(p)}, {"rho", to_json(type)},
                             {"character", chi.str()}})};
    std::ostringstream out;
    out << "partition: " << p.display() << "\n";
    out << "rho: " << type.display() << "\n";
    out << "character: " << chi.str() << "\n";
    return {0, out.str()};
}

CommandResult cmd_verify(int max_n, std::optional<int> k_filter, std::optional<int> t_order,
                         int jobs, Format format) {
    if (max_n < 1) return usage_error("max-n must be positive");
    if (k_filter && *k_filter < 1) return usage_error("k must be positive");
    if (jobs < 1) return usage_error("jobs must be positive");
    VerifyOptions options;
    options.max_n = max_n;
    options.k_filter = k_filter;
    options.t_order = t_order;
    options.jobs = jobs;
    VerifyResult result = verify_range(options);
    if (format == Format::json) {
        json failures = json::array();
        for (const auto& f : result.failures)
            failures.push_back(json{{"n", f.n},
                                    {"partition", to_json(f.shape)},
                                    {"k", f.k},
                                    {"check", f.check},
                                    {"detail", f.detail}});
        json j{{"max_n", max_n},
               {"shapes_checked", result.shapes_checked},
               {"pairs_checked", result.pairs_checked},
               {"ok", result.ok()},
               {"failures", failures}};
        return {result.ok() ? 0 : 1, dump(j)};
    }
    std::ostringstream out;
    out << "max n: " << max_n << "\n";
    out << "shapes checked: " << result.shapes_checked << "\n";
    out << "pairs checked: " << result.pairs_checked << "\n";
    if (result.ok()) {
        out << "all checks passed\n";
        return {0, out.str()};
    }
    const auto& first = result.failures.front();
    out << "counterexample: partition " << first.shape.display() << " k=" << first.k << " check "
        << first.check << ": " << first.detail << "\n";
    for (const auto& f : result.failures)
        out << "FAIL " << f.shape.display() << " k=" << f.k << " " << f.check << ": " << f.detail
            << "\n";
    out << "failures: " << result.failures.size() << "\n";
    return {1, out.str()};
}

}  // namespace ribbon::cli
