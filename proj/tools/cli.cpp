#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "subiso/bench.hpp"
#include "subiso/classifier.hpp"
#include "subiso/decomposition.hpp"
#include "subiso/embeddings.hpp"
#include "subiso/encoders.hpp"
#include "subiso/generators.hpp"
#include "subiso/oracle.hpp"
#include "subiso/solvers.hpp"

namespace subiso {
namespace {

using json = nlohmann::json;

// Mismatch between solver and oracle under --verify.
struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* s = std::getenv("SUBISO_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw InputError(std::string("SUBISO_SEED is not a number: ") + s);
        }
    }
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A file path, or a short pattern name when no such file exists.
Pattern load_pattern(const std::string& spec) {
    if (std::filesystem::is_regular_file(spec)) return Pattern::parse_string(read_file(spec));
    return patterns::named(spec);
}

HostGraph load_host_file(const std::string& path, const Pattern& H) { return load_host_string(read_file(path), H); }

std::vector<std::string> labels_of(const Pattern& H, const std::vector<int>& nodes) {
    std::vector<std::string> out;
    for (int u : nodes) out.push_back(H.label(u));
    std::sort(out.begin(), out.end());
    return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

std::string format_tuple(const HostGraph& G, const Tuple& t) {
    const Pattern& H = G.pattern();
    std::string s;
    for (int a = 0; a < H.n(); ++a) s += (a ? " " : "") + H.label(a) + "=" + G.id(t[a]);
    return s;
}

json tuple_json(const HostGraph& G, const Tuple& t) {
    json j = json::object();
    for (int a = 0; a < G.pattern().n(); ++a) j[G.pattern().label(a)] = G.id(t[a]);
    return j;
}

std::string rational_string(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    for (std::string x; std::getline(ss, x, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(x, &used));
            if (used != x.size()) throw InputError("");
        } catch (const std::exception&) {
            throw InputError("bad integer list: " + text);
        }
    }
    return out;
}

// Breaks one row of the first bag of the partial owning some solution, so that solution is lost.
// The row gets one attribute moved to another node of the same part, or is removed when the part
// has a single node. Returns false when there is no solution to break.
bool inject_fault(const HostGraph& G, FullEncoding& E) {
    for (auto& p : E.partials) {
        TreeInstance T = to_tree_instance(G, p);
        prune(T);
        auto sols = tree_list(T);
        if (sols.empty()) continue;
        const Tuple& t = sols.front();
        Relation r = *p.sub[0];
        std::vector<int> key;
        for (int a : r.attrs) key.push_back(t[a]);
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (!std::equal(key.begin(), key.end(), r.row(i))) continue;
            const int a = r.attrs[0];
            const auto& part = G.part(a);
            auto at = r.data.begin() + static_cast<std::ptrdiff_t>(i * r.arity());
            if (part.size() > 1) {
                *at = part[(std::find(part.begin(), part.end(), *at) - part.begin() + 1) % part.size()];
            } else {
                r.data.erase(at, at + static_cast<std::ptrdiff_t>(r.arity()));
            }
            r.sort_unique();
            p.sub[0] = std::make_shared<const Relation>(std::move(r));
            return true;
        }
    }
    return false;
}

std::vector<Tuple> solver_list(const HostGraph& G, bool fault, std::ostream& err) {
    FullEncoding E = encode(G);
    if (fault && !inject_fault(G, E)) err << "warning: no solution to corrupt\n";
    std::vector<Tuple> out;
    for (const auto& p : E.partials) {
        TreeInstance T = to_tree_instance(G, p);
        prune(T);
        auto part = tree_list(T);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

OracleOptions unlimited() {
    OracleOptions o;
    o.max_product = 0;
    return o;
}

// ---------------------------------------------------------------------------

struct Common {
    std::string pattern, host;
    bool as_json = false;
};

void add_pattern_opt(CLI::App* app, Common& c) {
    app->add_option("-p,--pattern", c.pattern, "pattern file or name (C6, K3,2, P(3,3,3), T(4,3,1), ...)")->required();
}
void add_host_opt(CLI::App* app, Common& c) { app->add_option("-g,--host", c.host, "host graph file")->required(); }
void add_json_opt(CLI::App* app, Common& c) { app->add_flag("--json", c.as_json, "JSON output"); }

int cmd_classify(const Common& c, std::ostream& out) {
    Pattern H = load_pattern(c.pattern);
    Verdict v = classify(H);
    if (c.as_json) {
        json j;
        json pieces = json::array();
        for (const auto& p : v.pieces) {
            json pj;
            pj["nodes"] = labels_of(H, p.nodes);
            pj["triple"] = p.triple ? json::array({p.triple->alpha, p.triple->beta, p.triple->gamma}) : json(nullptr);
            pj["F"] = p.F ? json(*p.F) : json(nullptr);
            pieces.push_back(pj);
        }
        j["pieces"] = pieces;
        j["verdict"] = v.subquadratic ? "subquadratic" : "quadratic-hard";
        j["c"] = v.c_string();
        j["c_decimal"] = v.subquadratic ? 2.0 - 1.0 / v.k : 2.0;
        if (v.hard_witness) j["hard_witness"] = labels_of(H, *v.hard_witness);
        out << j.dump() << "\n";
        return kExitOk;
    }
    out << "verdict: " << (v.subquadratic ? "subquadratic" : "quadratic-hard") << "\n";
    out << "c = " << v.c_string();
    if (v.subquadratic) out << " (" << 2.0 - 1.0 / v.k << ")";
    out << "\n";
    for (const auto& p : v.pieces) {
        out << "piece {" << join(labels_of(H, p.nodes), ",") << "}";
        if (p.triple) out << " P(" << p.triple->alpha << "," << p.triple->beta << "," << p.triple->gamma << "x2)";
        if (p.F) out << " F=" << *p.F;
        out << "\n";
    }
    if (v.hard_witness) out << "hard piece: {" << join(labels_of(H, *v.hard_witness), ",") << "}\n";
    return kExitOk;
}

int cmd_decompose(const Common& c, std::ostream& out) {
    Pattern H = load_pattern(c.pattern);
    Decomposition D = decompose(H);
    if (c.as_json) {
        json pieces = json::array();
        for (const auto& p : D.pieces) pieces.push_back(labels_of(H, p));
        out << json{{"pieces", pieces}}.dump() << "\n";
    } else {
        for (const auto& p : D.pieces) out << "{" << join(labels_of(H, p), ",") << "}\n";
    }
    return kExitOk;
}

int cmd_encode(const Common& c, bool dump, bool tuples, std::ostream& out) {
    Pattern H = load_pattern(c.pattern);
    HostGraph G = load_host_file(c.host, H);
    FullEncoding E = encode(G);
    if (dump) {
        out << dump_encoding(H, G, E, tuples);
        return kExitOk;
    }
    if (c.as_json) {
        json parts = json::array();
        for (const auto& p : E.partials) parts.push_back({{"tag", p.tag}, {"bags", p.td.bags.size()}, {"tuples", p.size()}});
        out << json{{"partials", parts}, {"total_tuples", E.size()}}.dump() << "\n";
        return kExitOk;
    }
    out << "partials=" << E.partials.size() << " tuples=" << E.size() << "\n";
    for (const auto& p : E.partials) out << p.tag << " bags=" << p.td.bags.size() << " tuples=" << p.size() << "\n";
    return kExitOk;
}

void print_solutions(const HostGraph& G, const std::vector<Tuple>& sols, bool as_json, std::ostream& out) {
    if (as_json) {
        json arr = json::array();
        for (const auto& t : sols) arr.push_back(tuple_json(G, t));
        out << json{{"count", sols.size()}, {"solutions", arr}}.dump() << "\n";
        return;
    }
    for (const auto& t : sols) out << format_tuple(G, t) << "\n";
}

int cmd_list(const Common& c, bool oracle, bool verify, bool fault, std::ostream& out, std::ostream& err) {
    Pattern H = load_pattern(c.pattern);
    HostGraph G = load_host_file(c.host, H);
    if (verify) {
        auto want = brute_list(G, unlimited());
        auto got = solver_list(G, fault, err);
        if (got != want) {
            std::vector<Tuple> missing, extra;
            std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
            std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
            std::ostringstream m;
            m << "MISMATCH solver=" << got.size() << " oracle=" << want.size() << " missing=" << missing.size()
              << " extra=" << extra.size();
            throw Mismatch(m.str());
        }
        out << "VERIFIED n=" << got.size() << "\n";
        return kExitOk;
    }
    print_solutions(G, oracle ? brute_list(G, unlimited()) : solver_list(G, fault, err), c.as_json, out);
    return kExitOk;
}

int cmd_enum(const Common& c, std::uint64_t limit, bool steps, std::ostream& out) {
    Pattern H = load_pattern(c.pattern);
    HostGraph G = load_host_file(c.host, H);
    Enumerator en(G);
    std::vector<Tuple> sols;
    std::uint64_t max_steps = 0;
    Tuple t;
    while ((limit == 0 || sols.size() < limit) && en.next(t)) {
        sols.push_back(t);
        max_steps = std::max(max_steps, en.last_steps());
    }
    if (c.as_json) {
        json arr = json::array();
        for (const auto& s : sols) arr.push_back(tuple_json(G, s));
        json j{{"count", sols.size()}, {"solutions", arr}};
        if (steps) j["max_steps"] = max_steps;
        out << j.dump() << "\n";
        return kExitOk;
    }
    for (const auto& s : sols) out << format_tuple(G, s) << "\n";
    if (steps) out << "# max steps per next: " << max_steps << "\n";
    return kExitOk;
}

int cmd_minweight(const Common& c, bool oracle, bool verify, std::ostream& out) {
    Pattern H = load_pattern(c.pattern);
    HostGraph G = load_host_file(c.host, H);
    auto oracle_min = [&]() -> std::optional<Weight> {
        auto r = brute_min_weight(G, unlimited());
        return r ? std::optional<Weight>(r->weight) : std::nullopt;
    };
    auto solver_min = [&]() -> std::optional<Weight> {
        Weight w = min_weight(G);
        return w == kInf ? std::nullopt : std::optional<Weight>(w);
    };
    auto show = [](std::optional<Weight> w) { return w ? std::to_string(*w) : std::string("none"); };
    if (verify) {
        auto a = solver_min(), b = oracle_min();
        if (a != b) throw Mismatch("MISMATCH solver=" + show(a) + " oracle=" + show(b));
        out << "VERIFIED weight=" << show(a) << "\n";
        return kExitOk;
    }
    auto w = oracle ? oracle_min() : solver_min();
    if (c.as_json)
        out << json{{"weight", w ? json(*w) : json(nullptr)}}.dump() << "\n";
    else
        out << show(w) << "\n";
    return kExitOk;
}

struct EmbedArgs {
    std::string family, params, pattern;
    bool search = false;
    int kmax = 7;
};

int cmd_embed(const EmbedArgs& e, bool as_json, std::ostream& out) {
    Pattern H;
    CliqueEmbedding psi;
    std::string how;
    if (e.search) {
        if (e.pattern.empty()) throw InputError("embed --search needs --pattern");
        H = load_pattern(e.pattern);
        psi = clemb_search(H, e.kmax).best;
        how = "search up to k=" + std::to_string(e.kmax);
        if (psi.images.empty()) throw InputError("search found no embedding");
    } else {
        if (e.family.empty()) throw InputError("embed needs --family or --search");
        auto p = parse_ints(e.params);
        LowerBound lb;
        if (e.family == "goggles") {
            if (!p.empty()) throw InputError("goggles takes no parameters");
            lb = {patterns::goggles(), goggles_embedding(), "goggles"};
        } else if (e.family == "pa2c") {
            if (p.size() != 2) throw InputError("pa2c takes --params alpha,gamma");
            lb = build_embedding_pa2c(p[0], p[1]);
        } else if (e.family == "pabc" || e.family == "triple") {
            if (p.size() != 3) throw InputError(e.family + " takes --params alpha,beta,gamma");
            lb = e.family == "pabc" ? build_embedding_pabc(p[0], p[1], p[2])
                                    : build_embedding_for_triple(PTriple{p[0], p[1], p[2]});
        } else {
            throw InputError("unknown family " + e.family + " (goggles, pa2c, pabc, triple)");
        }
        H = lb.pattern;
        psi = lb.psi;
        how = lb.how;
    }
    const std::string error = embedding_error(H, psi);
    if (!error.empty()) throw std::logic_error("constructed embedding is invalid: " + error);
    const int wed = weak_edge_depth(H, psi);
    const Rational ratio(psi.k(), wed);
    std::vector<std::vector<std::string>> images;
    for (const auto& img : psi.images) images.push_back(labels_of(H, img));
    if (as_json) {
        out << json{{"how", how}, {"images", images}, {"k", psi.k()}, {"wed", wed}, {"ratio", rational_string(ratio)},
                    {"valid", true}}
                   .dump()
            << "\n";
        return kExitOk;
    }
    out << "construction: " << how << "\n";
    for (std::size_t i = 0; i < images.size(); ++i) out << "image " << i + 1 << ": " << join(images[i], " ") << "\n";
    out << "k = " << psi.k() << "\nwed = " << wed << "\nratio = " << rational_string(ratio) << "\n";
    return kExitOk;
}

struct GenArgs {
    std::string pattern, config, out;
    std::vector<std::string> sets;
    std::optional<std::uint64_t> seed;
    bool planted = false;
};

int cmd_gen(const GenArgs& g, std::ostream& out) {
    Pattern H = load_pattern(g.pattern);
    std::string text = g.config.empty() ? "" : read_file(g.config) + "\n";
    for (const auto& s : g.sets) text += s + "\n";
    GenSpec spec = parse_gen_config(text, H);
    if (g.seed) spec.seed = *g.seed;
    else if (text.find("seed") == std::string::npos) spec.seed = default_seed();
    Generated res = generate(spec);
    std::ostringstream body;
    if (g.planted)
        for (const auto& t : res.planted) body << "# planted " << format_tuple(res.host, t) << "\n";
    body << res.host.serialize();
    if (g.out.empty()) {
        out << body.str();
    } else {
        std::ofstream f(g.out);
        if (!f || !(f << body.str())) throw InputError("cannot write " + g.out);
    }
    return kExitOk;
}

struct BenchArgs {
    std::vector<std::string> patterns;
    std::string sizes = "2^10..2^14";
    std::string family = "auto";
    bool brute = false;
    std::optional<std::uint64_t> seed;
};

int cmd_bench(const BenchArgs& b, std::ostream& out) {
    auto sizes = parse_sizes(b.sizes);
    const std::uint64_t seed = b.seed ? *b.seed : default_seed();
    out << bench_csv_header(b.brute) << "\n";
    for (const auto& id : b.patterns) {
        Pattern H = load_pattern(id);
        std::vector<double> ms, cs, ws, bs;
        for (std::uint64_t m : sizes) {
            HostGraph G = b.family == "auto"      ? bench_host(H, m, seed)
                          : b.family == "sparse"  ? sparse_random_host(H, m, seed)
                          : b.family == "hubpair" ? hub_pair_host(H, m, seed)
                          : b.family == "planted" ? planted_hub_host(H, m, seed)
                                                  : throw InputError("unknown family " + b.family);
            BenchRow r = bench_once(id, G, b.brute);
            out << bench_csv_row(r, b.brute) << "\n" << std::flush;
            ms.push_back(static_cast<double>(r.m));
            cs.push_back(static_cast<double>(std::max<std::uint64_t>(r.counter, 1)));
            ws.push_back(std::max(r.wall_ms, 1e-3));
            bs.push_back(static_cast<double>(std::max<std::uint64_t>(r.brute_counter, 1)));
        }
        if (sizes.size() < 4) {
            out << "# slope " << id << ": needs at least 4 sizes\n";
            continue;
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << "# slope " << id << " counter=" << loglog_slope(ms, cs) << " wall=" << loglog_slope(ms, ws);
        if (b.brute) line << " brute_counter=" << loglog_slope(ms, bs);
        out << line.str() << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Colored subgraph listing, enumeration and minimum weight for fixed patterns"};
    app.require_subcommand(1);
    Common c;

    auto* classify_cmd = app.add_subcommand("classify", "complexity class of a pattern");
    add_pattern_opt(classify_cmd, c);
    add_json_opt(classify_cmd, c);

    auto* decompose_cmd = app.add_subcommand("decompose", "pieces of the clique-separator decomposition");
    add_pattern_opt(decompose_cmd, c);
    add_json_opt(decompose_cmd, c);

    bool dump = false, tuples = false;
    auto* encode_cmd = app.add_subcommand("encode", "build the encoding of a host");
    add_pattern_opt(encode_cmd, c);
    add_host_opt(encode_cmd, c);
    add_json_opt(encode_cmd, c);
    encode_cmd->add_flag("--dump", dump, "JSON lines per partial");
    encode_cmd->add_flag("--tuples", tuples, "include bag tuples in --dump");

    bool oracle = false, verify = false, fault = false;
    auto* list_cmd = app.add_subcommand("list", "all solutions");
    add_pattern_opt(list_cmd, c);
    add_host_opt(list_cmd, c);
    add_json_opt(list_cmd, c);
    list_cmd->add_flag("--oracle", oracle, "brute force instead of the solver");
    list_cmd->add_flag("--verify", verify, "compare solver against brute force");
    list_cmd->add_flag("--inject-fault", fault, "")->group("");

    std::uint64_t limit = 0;
    bool steps = false;
    auto* enum_cmd = app.add_subcommand("enum", "constant-delay enumeration");
    add_pattern_opt(enum_cmd, c);
    add_host_opt(enum_cmd, c);
    add_json_opt(enum_cmd, c);
    enum_cmd->add_option("--limit", limit, "stop after N solutions (0: all)");
    enum_cmd->add_flag("--steps", steps, "report the largest step count of one next()");

    auto* min_cmd = app.add_subcommand("minweight", "minimum total edge weight of a solution");
    add_pattern_opt(min_cmd, c);
    add_host_opt(min_cmd, c);
    add_json_opt(min_cmd, c);
    min_cmd->add_flag("--oracle", oracle, "brute force instead of the solver");
    min_cmd->add_flag("--verify", verify, "compare solver against brute force");

    EmbedArgs e;
    auto* embed_cmd = app.add_subcommand("embed", "clique embeddings");
    embed_cmd->add_option("--family", e.family, "goggles, pa2c, pabc or triple");
    embed_cmd->add_option("--params", e.params, "comma separated parameters");
    embed_cmd->add_flag("--search", e.search, "exhaustive search on --pattern");
    embed_cmd->add_option("-p,--pattern", e.pattern, "pattern for --search");
    embed_cmd->add_option("--kmax", e.kmax, "largest clique tried by --search")->check(CLI::Range(3, 10));
    add_json_opt(embed_cmd, c);

    GenArgs g;
    auto* gen_cmd = app.add_subcommand("gen", "random host graph");
    gen_cmd->add_option("-p,--pattern", g.pattern, "pattern file or name")->required();
    gen_cmd->add_option("--config", g.config, "key=value file (sizes, m, density, plant, skew, hub, power, weighted, seed)");
    gen_cmd->add_option("--set", g.sets, "extra key=value line, repeatable");
    gen_cmd->add_option("--seed", g.seed, "overrides config and SUBISO_SEED");
    gen_cmd->add_option("-o,--out", g.out, "output file (default stdout)");
    gen_cmd->add_flag("--planted", g.planted, "prefix planted solutions as comments");

    BenchArgs b;
    auto* bench_cmd = app.add_subcommand("bench", "scaling run with log-log slope fit (CSV)");
    bench_cmd->add_option("-p,--pattern", b.patterns, "pattern file or name, repeatable")->required();
    bench_cmd->add_option("--sizes", b.sizes, "2^a..2^b or a comma list");
    bench_cmd->add_option("--family", b.family, "auto, sparse, hubpair or planted");
    bench_cmd->add_flag("--brute", b.brute, "also run brute force and fit its slope");
    bench_cmd->add_option("--seed", b.seed, "overrides SUBISO_SEED");

    std::vector<std::string> argv_store{"subiso"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInput;
    }

    try {
        if (verify && oracle) throw InputError("--verify already runs the oracle; drop --oracle");
        if (fault && !verify && oracle) throw InputError("--inject-fault affects the solver only");
        if (*classify_cmd) return cmd_classify(c, out);
        if (*decompose_cmd) return cmd_decompose(c, out);
        if (*encode_cmd) return cmd_encode(c, dump, tuples, out);
        if (*list_cmd) return cmd_list(c, oracle, verify, fault, out, err);
        if (*enum_cmd) return cmd_enum(c, limit, steps, out);
        if (*min_cmd) return cmd_minweight(c, oracle, verify, out);
        if (*embed_cmd) return cmd_embed(e, c.as_json, out);
        if (*gen_cmd) return cmd_gen(g, out);
        if (*bench_cmd) return cmd_bench(b, out);
    } catch (const HardPattern& ex) {
        err << "hard pattern: " << ex.what() << " (use --oracle for brute force)\n";
        return kExitHard;
    } catch (const Mismatch& ex) {
        out << ex.what() << "\n";
        return kExitMismatch;
    } catch (const InputError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const OverflowError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace subiso
