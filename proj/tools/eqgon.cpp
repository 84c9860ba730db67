// Command-line front end: decide, search, verify, construct and render
// equilateral polygons on planar integral lattices.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "eqgon/arith.hpp"
#include "eqgon/corpus.hpp"
#include "eqgon/gram.hpp"
#include "eqgon/polygon.hpp"
#include "eqgon/rep.hpp"
#include "eqgon/search.hpp"
#include "eqgon/serialize.hpp"

namespace {

using namespace eqgon;

constexpr int kOk = 0;
constexpr int kNotFound = 1; // also: invalid input data
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

certificate load_cert(const std::string& path) { return parse_certificate(read_file(path)); }

mpq_class parse_rational(const std::string& s) {
    try {
        mpq_class q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw parse_error("not a rational number: \"" + s + "\"");
    }
}

int cmd_classify(const std::string& gram_csv, int n) {
    std::vector<std::string> parts;
    std::stringstream ss(gram_csv);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 3) {
        std::cerr << "--gram expects g11,g12,g22\n";
        return kUsage;
    }
    gram_matrix gm{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
    nu_invariant nu = nu_of_gram(gm);
    classification_result res = classify_lattice(gm, n);
    std::cout << to_string(res.v) << " (" << to_string(res.reason) << ": nu=" << nu.nu
              << ", n=" << n << ")\n";
    return res.v == verdict::NotContains ? kNotFound : kOk;
}

int cmd_search(i64 m, int p, i64 N, const std::string& mode, u64 max_nodes, int jobs) {
    search_budget budget;
    budget.N = N;
    budget.max_nodes = max_nodes;
    budget.jobs = jobs;
    search_result res = (mode == "general") ? find_zero_sum_general(m, p, budget)
                                            : find_zero_sum_symmetric(m, p, budget);
    std::cerr << "nodes used: " << res.nodes_used << "\n";
    if (res.status == search_status::found) {
        std::cout << emit_certificate(*res.cert);
        return kOk;
    }
    std::cout << to_string(res.status) << "\n";
    return kNotFound;
}

int cmd_verify_file(const std::string& path) {
    try {
        certificate c = load_cert(path);
        std::cout << "valid (m=" << c.m << ", n=" << c.n << ", side_sq=" << c.side_sq.get_str()
                  << ")\n";
        return kOk;
    } catch (const parse_error& e) {
        std::cout << "invalid: " << e.what() << "\n";
        return kNotFound;
    }
}

int cmd_verify_corpus() {
    const auto& rows = load_corpus(); // re-verifies every row
    int t1 = 0, t2 = 0;
    for (const auto& row : rows) {
        (row.source == 1 ? t1 : t2)++;
        std::cout << "m=" << row.m << " p=" << row.p << " src=" << row.source << " valid\n";
    }
    std::cout << t1 << " + " << t2 << " rows verified\n";
    return kOk;
}

int cmd_polygon(const std::string& path, const std::string& svg_out) {
    certificate c = load_cert(path);
    polygon poly = assemble_convex(c);
    std::ofstream out(svg_out, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << svg_out << "\n";
        return kNotFound;
    }
    out << emit_svg(poly);
    std::cout << "wrote " << svg_out << " (" << poly.vertices.size() << " vertices)\n";
    return kOk;
}

int cmd_extend(const std::string& path) {
    certificate c = load_cert(path);
    certificate bigger = canonicalize(extend_plus_two(c));
    std::cout << emit_certificate(bigger);
    return kOk;
}

int cmd_even(i64 m, int n) {
    certificate c = canonicalize(even_gon(m, n));
    std::cout << emit_certificate(c);
    return kOk;
}

int cmd_reps(i64 m, i64 N) {
    for (const rep& r : enumerate_reps(m, N))
        std::cout << r.a << "," << r.b << "," << r.c << "\n";
    return kOk;
}

int cmd_descend(const std::string& path, i64 q) {
    certificate c = load_cert(path);
    certificate down = canonicalize(descend_by_prime(c, q));
    std::cout << emit_certificate(down);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equilateral polygons on planar integral lattices"};
    app.require_subcommand(1);

    std::string gram_csv, mode = "symmetric", file, svg_out;
    i64 m = 0, N = 0, q = 0;
    int n = 0, jobs = 1;
    u64 max_nodes = 2'000'000'000ULL;
    bool use_corpus = false;

    auto* classify = app.add_subcommand("classify", "decide n-gon existence for a Gram matrix");
    classify->add_option("--gram", gram_csv, "g11,g12,g22 entries, rationals")->required();
    classify->add_option("--n", n, "vertex count")->required()->check(CLI::Range(3, 1 << 20));

    auto* search = app.add_subcommand("search", "hunt for a p-gon certificate on lattice m");
    search->add_option("--m", m, "square-free lattice parameter")->required();
    search->add_option("--p", n, "vertex count")->required()->check(CLI::Range(3, 64));
    search->add_option("--N", N, "unit denominator cap")->required()->check(CLI::PositiveNumber);
    search->add_option("--mode", mode, "symmetric (default) or general")
        ->check(CLI::IsMember({"symmetric", "general"}));
    search->add_option("--max-nodes", max_nodes, "search node budget");
    search->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

    auto* verify = app.add_subcommand("verify", "check a certificate file or the corpus");
    auto* vf = verify->add_option("--file", file, "certificate JSON path");
    auto* vc = verify->add_flag("--corpus", use_corpus, "verify every embedded table row");
    vf->excludes(vc);

    auto* poly = app.add_subcommand("polygon", "assemble a certificate and render SVG");
    poly->add_option("--file", file, "certificate JSON path")->required();
    poly->add_option("--svg", svg_out, "output SVG path")->required();

    auto* extend = app.add_subcommand("extend", "grow a certificate by two vertices");
    extend->add_option("--file", file, "certificate JSON path")->required();

    auto* even = app.add_subcommand("even", "construct an even n-gon certificate");
    even->add_option("--m", m, "square-free lattice parameter")->required();
    even->add_option("--n", n, "even vertex count")->required()->check(CLI::Range(4, 1 << 20));

    auto* reps = app.add_subcommand("reps", "list primitive norm representations up to N");
    reps->add_option("--m", m, "square-free lattice parameter")->required();
    reps->add_option("--N", N, "denominator cap")->required()->check(CLI::PositiveNumber);

    auto* descend = app.add_subcommand("descend", "divide a certificate by a prime");
    descend->add_option("--file", file, "certificate JSON path")->required();
    descend->add_option("--q", q, "prime divisor")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (classify->parsed()) return cmd_classify(gram_csv, n);
        if (search->parsed()) return cmd_search(m, n, N, mode, max_nodes, jobs);
        if (verify->parsed()) {
            if (use_corpus) return cmd_verify_corpus();
            if (!file.empty()) return cmd_verify_file(file);
            std::cerr << "verify needs --file or --corpus\n";
            return kUsage;
        }
        if (poly->parsed()) return cmd_polygon(file, svg_out);
        if (extend->parsed()) return cmd_extend(file);
        if (even->parsed()) return cmd_even(m, n);
        if (reps->parsed()) return cmd_reps(m, N);
        if (descend->parsed()) return cmd_descend(file, q);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNotFound;
    } catch (const invalid_certificate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNotFound;
    } catch (const not_divisible&) {
        std::cerr << "NotDivisible\n";
        return kNotFound;
    } catch (const budget_exhausted&) {
        std::cerr << "BudgetExhausted\n";
        return kNotFound;
    } catch (const corpus_corrupt& e) {
        std::cerr << "corpus corrupt: " << e.what() << "\n";
        return kNotFound;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNotFound;
    }
    return kUsage;
}
