#include "ttc/cli.hpp"

#include "ttc/io.hpp"
#include "ttc/petersen.hpp"
#include "ttc/prism.hpp"
#include "ttc/solver.hpp"
#include "ttc/zigzag.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ttc {

namespace {

struct UsageError {
    std::string message;
};

constexpr const char* kUsage =
    "usage: ttc <command> [args]\n"
    "\n"
    "commands:\n"
    "  gen <family> [n]                         print a graph file (all edges near)\n"
    "  solve --pair r,t <file> [--labeling hex] exact coloring search\n"
    "  construct {prism|ladder|fan|petersen} <file> [--labeling hex]\n"
    "                                           run the matching constructive colorer\n"
    "  verify --pair r,t <graphfile> <coloringfile>\n"
    "  total-check <family> <n> --pair r,t [--jobs k] [--constructive]\n"
    "  petersen audit [--jobs k]\n"
    "  moebius certify <n>\n"
    "  poset {leq|cub} r1,t1 r2,t2\n"
    "  export-dot <file> [--labeling hex]\n"
    "\n"
    "TTC_JOBS overrides --jobs.  Labeling bit i marks edge i far.\n";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError{"cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

struct Flags {
    std::vector<std::string> positional;
    std::optional<ParamPair> pair;
    std::optional<std::uint64_t> labeling;
    int jobs = 1;
    bool constructive = false;
};

Flags parse_flags(const std::vector<std::string>& args, size_t from) {
    Flags f;
    if (const char* env = std::getenv("TTC_JOBS")) f.jobs = std::max(1, std::atoi(env));
    for (size_t i = from; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto next = [&]() -> const std::string& {
            if (i + 1 >= args.size()) throw UsageError{a + " needs a value"};
            return args[++i];
        };
        if (a == "--pair") {
            f.pair = parse_pair(next());
            if (!f.pair) throw UsageError{"bad --pair (want r,t)"};
        } else if (a == "--labeling") {
            const std::string& h = next();
            std::uint64_t bits = 0;
            for (char c : h) {
                int d;
                if (c >= '0' && c <= '9') d = c - '0';
                else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
                else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
                else throw UsageError{"bad --labeling hex"};
                bits = bits * 16 + static_cast<std::uint64_t>(d);
            }
            f.labeling = bits;
        } else if (a == "--jobs") {
            if (!std::getenv("TTC_JOBS")) f.jobs = std::max(1, std::atoi(next().c_str()));
            else (void)next();
        } else if (a == "--constructive") {
            f.constructive = true;
        } else if (!a.empty() && a[0] == '-') {
            throw UsageError{"unknown flag " + a};
        } else {
            f.positional.push_back(a);
        }
    }
    return f;
}

GraphDocument load_document(const std::string& path, const Flags& f, std::ostream& out) {
    const std::string text = read_file(path);
    out << "digest " << hex64(fnv1a(text)) << "\n";
    GraphDocument doc = parse_graph_file(text);
    if (f.labeling) doc.labeling = NearFarLabeling::from_bits(doc.graph, *f.labeling);
    return doc;
}

ColorerFn family_colorer(Family family) {
    switch (family) {
    case Family::prism: return [](const Graph& g, const NearFarLabeling& l) { return prism_color(g, l); };
    case Family::ladder: return [](const Graph& g, const NearFarLabeling& l) { return ladder_color(g, l); };
    case Family::fan: return [](const Graph& g, const NearFarLabeling& l) { return fan_color(g, l); };
    case Family::petersen:
        return [](const Graph& g, const NearFarLabeling& l) { return petersen_color(g, l, true); };
    default: return {};
    }
}

int cmd_gen(const Flags& f, std::ostream& out) {
    if (f.positional.empty()) throw UsageError{"gen needs a family"};
    const auto family = family_from_name(f.positional[0]);
    if (!family) throw UsageError{"unknown family " + f.positional[0]};
    int n = 0;
    if (f.positional.size() > 1) n = std::atoi(f.positional[1].c_str());
    GraphDocument doc;
    doc.name = f.positional[0] + (f.positional.size() > 1 ? "_" + f.positional[1] : "");
    doc.graph = build_family(*family, n);
    doc.labeling = NearFarLabeling::all_near(doc.graph);
    if (f.labeling) doc.labeling = NearFarLabeling::from_bits(doc.graph, *f.labeling);
    out << serialize_graph_file(doc);
    return 0;
}

int cmd_solve(const Flags& f, std::ostream& out) {
    if (!f.pair) throw UsageError{"solve needs --pair"};
    if (f.positional.empty()) throw UsageError{"solve needs a graph file"};
    GraphDocument doc = load_document(f.positional[0], f, out);
    auto col = find_coloring(doc.graph, doc.labeling, *f.pair);
    if (!col) {
        out << "unsat\n";
        return 1;
    }
    out << serialize_coloring_file(*col);
    return 0;
}

int cmd_construct(const Flags& f, std::ostream& out) {
    if (f.positional.size() < 2) throw UsageError{"construct needs a family and a graph file"};
    const auto family = family_from_name(f.positional[0]);
    if (!family) throw UsageError{"unknown family " + f.positional[0]};
    const ColorerFn colorer = family_colorer(*family);
    if (!colorer) throw UsageError{"no constructive colorer for " + f.positional[0]};
    GraphDocument doc = load_document(f.positional[1], f, out);
    const auto n = matches_family(doc.graph, *family);
    if (!n) throw UsageError{"graph in file is not a " + f.positional[0]};
    // rebuild with canonical metadata; labels carry over by endpoints
    const Graph canon = build_family(*family, *n);
    NearFarLabeling lab(canon.edge_count());
    for (int e = 0; e < doc.graph.edge_count(); ++e) {
        auto [u, v] = doc.graph.edge(e);
        lab.set_far(*canon.edge_index(u, v), doc.labeling.is_far(e));
    }
    const ThresholdColoring col = canonicalized(colorer(canon, lab));
    out << serialize_coloring_file(col);
    return 0;
}

int cmd_verify(const Flags& f, std::ostream& out) {
    if (!f.pair) throw UsageError{"verify needs --pair"};
    if (f.positional.size() < 2) throw UsageError{"verify needs graph and coloring files"};
    GraphDocument doc = load_document(f.positional[0], f, out);
    const std::string ctext = read_file(f.positional[1]);
    out << "digest " << hex64(fnv1a(ctext)) << "\n";
    ThresholdColoring col = parse_coloring_file(ctext, doc.graph.vertex_count());
    col.pair = *f.pair;
    const auto report = verify(doc.graph, doc.labeling, *f.pair, col);
    if (report.empty()) {
        out << "ok\n";
        return 0;
    }
    for (const auto& v : report) out << "violation " << v.str() << "\n";
    return 1;
}

int cmd_total_check(const Flags& f, std::ostream& out, std::ostream& err) {
    if (f.positional.size() < 2) throw UsageError{"total-check needs a family and n"};
    if (!f.pair) throw UsageError{"total-check needs --pair"};
    const auto family = family_from_name(f.positional[0]);
    if (!family) throw UsageError{"unknown family " + f.positional[0]};
    const int n = std::atoi(f.positional[1].c_str());
    const Graph g = build_family(*family, n);
    SweepOptions opts;
    opts.jobs = f.jobs;
    if (f.constructive) {
        opts.constructor = family_colorer(*family);
        if (!opts.constructor) throw UsageError{"no constructive colorer for " + f.positional[0]};
    }
    const SweepReport rep = total_check(g, *f.pair, opts);
    out << "total-check " << family_name(*family) << " " << n << "\n";
    out << "pair " << f.pair->str() << "\n";
    out << "mode " << (f.constructive ? "constructive" : "solver") << "\n";
    out << rep.labelings << " labelings, " << rep.failures.size() << " failures\n";
    if (f.constructive) out << "constructor-failures " << rep.constructor_failures << "\n";
    out << "max-window " << rep.max_window << "\n";
    for (auto bits : rep.failures) out << "failure " << hex64(bits) << "\n";
    err << "wall-seconds " << rep.wall_seconds << "\n";
    return rep.failures.empty() && rep.constructor_failures == 0 ? 0 : 1;
}

int cmd_petersen(const Flags& f, std::ostream& out) {
    if (f.positional.empty() || f.positional[0] != "audit")
        throw UsageError{"usage: ttc petersen audit"};
    const PetersenAudit audit = audit_case_analysis(f.jobs);
    out << "petersen audit\n";
    out << audit.labelings << " labelings\n";
    out << "far-edge-cut " << audit.far_edge_cut << "\n";
    out << "xxyyzz " << audit.xxyyzz << "\n";
    out << "nxxyy " << audit.nxxyy << "\n";
    out << "uncovered " << audit.uncovered << "\n";
    return audit.uncovered == 0 ? 0 : 1;
}

int cmd_moebius(const Flags& f, std::ostream& out) {
    if (f.positional.size() < 2 || f.positional[0] != "certify")
        throw UsageError{"usage: ttc moebius certify <n>"};
    const int n = std::atoi(f.positional[1].c_str());
    const Graph g = build_family(Family::moebius, n);
    const NearFarLabeling lab = moebius_spoke_far_labeling(g);
    const ImpossibilityCertificate cert = moebius_certificate(n);
    out << "moebius certify " << n << "\n";
    out << "labeling spokes-far\n";
    out << "premise c(" << cert.steps.front().w << ") > c(" << cert.steps.front().x << ")\n";
    out << cert.describe(g);
    const bool ok = check_certificate(g, lab, cert);
    out << "certificate " << (ok ? "valid" : "INVALID") << "\n";
    return ok ? 0 : 1;
}

int cmd_poset(const Flags& f, std::ostream& out) {
    if (f.positional.size() < 3) throw UsageError{"usage: ttc poset {leq|cub} r1,t1 r2,t2"};
    const auto p1 = parse_pair(f.positional[1]);
    const auto p2 = parse_pair(f.positional[2]);
    if (!p1 || !p2) throw UsageError{"bad parameter pair"};
    if (f.positional[0] == "leq") {
        if (auto emb = pair_leq(*p1, *p2)) {
            out << "leq witness";
            for (int x : emb->phi) out << " " << x;
            out << "\n";
            return 0;
        }
        out << (pair_leq(*p2, *p1) ? "gt\n" : "incomparable\n");
        return 1;
    }
    if (f.positional[0] == "cub") {
        out << "cub " << common_upper_bound(*p1, *p2).str() << "\n";
        return 0;
    }
    throw UsageError{"unknown poset subcommand " + f.positional[0]};
}

int cmd_export_dot(const Flags& f, std::ostream& out) {
    if (f.positional.empty()) throw UsageError{"export-dot needs a graph file"};
    GraphDocument doc = load_document(f.positional[0], f, out);
    out << export_dot(doc);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty()) {
            err << kUsage;
            return 2;
        }
        const std::string& cmd = args[0];
        const Flags f = parse_flags(args, 1);
        if (cmd == "gen") return cmd_gen(f, out);
        if (cmd == "solve") return cmd_solve(f, out);
        if (cmd == "construct") return cmd_construct(f, out);
        if (cmd == "verify") return cmd_verify(f, out);
        if (cmd == "total-check") return cmd_total_check(f, out, err);
        if (cmd == "petersen") return cmd_petersen(f, out);
        if (cmd == "moebius") return cmd_moebius(f, out);
        if (cmd == "poset") return cmd_poset(f, out);
        if (cmd == "export-dot") return cmd_export_dot(f, out);
        if (cmd == "help" || cmd == "--help" || cmd == "-h") {
            out << kUsage;
            return 0;
        }
        err << "unknown command " << cmd << "\n" << kUsage;
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.message << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace ttc
