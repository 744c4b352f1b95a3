// Command-line front end for the exact matrix-factorisation library.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 obstruction unsatisfiable, 5 infertile solution.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "imf/detident.hpp"
#include "imf/factor.hpp"
#include "imf/io.hpp"
#include "imf/latin.hpp"
#include "imf/obstruction.hpp"

using json = nlohmann::json;
using namespace imf;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitUnsatisfiable = 4;
constexpr int kExitInfertile = 5;

struct Options {
    std::string file;
    std::string mode = "gram";
    std::string kind = "hankel";
    std::string solution;
    long box = -1;
    long n = 0;
    unsigned threads = 0;  // 0 = all cores
    bool json_out = false;
    bool count_only = false;
    bool all = false;
};

json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(to_string(e));
    return a;
}

json matrix_json(const Matrix& m) {
    json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    json entries = json::array();
    for (const auto& e : m.entries()) entries.push_back(to_string(e));
    doc["entries"] = entries;
    return doc;
}

std::string solution_line(const ObstructionSolution& s, std::size_t n) {
    std::string line = s.w.get_str();
    for (std::size_t j = 0; j + 1 < n; ++j) line += " " + s.x[j].get_str();
    for (std::size_t j = 0; j + 1 < n && j < s.y.size(); ++j)
        line += " " + s.y[j].get_str();
    return line;
}

FormMode parse_mode(const std::string& mode) {
    if (mode == "gram") return FormMode::Gram;
    if (mode == "square") return FormMode::Square;
    throw std::invalid_argument("mode must be 'gram' or 'square'");
}

int cmd_decompose(const Options& opt) {
    Matrix m = read_matrix_file(opt.file);
    SVParts p = decompose(m);
    if (opt.json_out) {
        json doc;
        doc["command"] = "decompose";
        doc["a"] = vec_json(p.a);
        doc["b"] = vec_json(p.b);
        doc["weight"] = to_string(p.weight);
        doc["m0"] = matrix_json(p.m0);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "weight = " << to_string(p.weight) << "\n"
              << "a = " << vector_to_text(p.a) << "\n"
              << "b = " << vector_to_text(p.b) << "\n"
              << "m0 =\n"
              << matrix_to_text(p.m0);
    return 0;
}

int cmd_obstruct(const Options& opt) {
    Matrix m = read_matrix_file(opt.file);
    FormMode mode = parse_mode(opt.mode);
    ObstructionForm f =
        mode == FormMode::Gram ? weight_balance_gram(m) : weight_balance_square(m);
    if (opt.json_out) {
        json doc;
        doc["command"] = "obstruct";
        doc["mode"] = opt.mode;
        doc["equation"] = format_equation(f);
        doc["target"] = f.target.get_str();
        doc["satisfiable"] = f.satisfiable;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << format_equation(f) << "\n";
    }
    return f.satisfiable ? 0 : kExitUnsatisfiable;
}

int cmd_solve(const Options& opt) {
    Matrix m = read_matrix_file(opt.file);
    FormMode mode = parse_mode(opt.mode);
    std::vector<ObstructionSolution> sols;
    if (mode == FormMode::Gram) {
        sols = solve_gram(weight_balance_gram(m), opt.threads);
    } else {
        if (opt.box < 0)
            throw std::invalid_argument("square mode needs --box");
        sols = solve_square(weight_balance_square(m), Int(opt.box));
    }
    if (opt.json_out) {
        json doc;
        doc["command"] = "solve";
        doc["count"] = sols.size();
        if (!opt.count_only) {
            json list = json::array();
            for (const auto& s : sols) list.push_back(solution_line(s, m.rows()));
            doc["solutions"] = list;
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    if (opt.count_only) {
        std::cout << sols.size() << "\n";
        return 0;
    }
    for (const auto& s : sols) std::cout << solution_line(s, m.rows()) << "\n";
    return 0;
}

ObstructionSolution parse_solution(const std::string& text, std::size_t n) {
    std::istringstream in(text);
    ObstructionSolution s;
    std::vector<long> vals;
    long v;
    while (in >> v) vals.push_back(v);
    if (!in.eof() || vals.size() != n)
        throw std::invalid_argument("--solution needs " + std::to_string(n) +
                                    " integers: w x1 ... x" + std::to_string(n - 1));
    s.w = vals[0];
    Int tail(0);
    for (std::size_t j = 1; j < n; ++j) {
        s.x.push_back(Int(vals[j]));
        tail -= vals[j];
    }
    s.x.push_back(tail);
    return s;
}

int cmd_factor(const Options& opt) {
    Matrix m = read_matrix_file(opt.file);
    if (opt.all) {
        auto [classes, stats] = full_factor_search(m, opt.threads);
        if (opt.json_out) {
            json doc;
            doc["command"] = "factor";
            doc["solutions"] = stats.solution_count;
            doc["fertile"] = stats.fertile_solutions;
            doc["distinct_factors"] = stats.distinct_factors;
            doc["classes"] = stats.class_count;
            json reps = json::array();
            for (const auto& c : classes) reps.push_back(matrix_json(c.canonical));
            doc["canonical_representatives"] = reps;
            std::cout << doc.dump(2) << "\n";
            return 0;
        }
        std::cout << "solutions=" << stats.solution_count
                  << " fertile=" << stats.fertile_solutions
                  << " classes=" << stats.class_count << "\n";
        for (const auto& c : classes) {
            std::cout << "\n" << matrix_to_text(c.canonical);
        }
        return 0;
    }
    if (opt.solution.empty())
        throw std::invalid_argument("factor needs --solution or --all");
    ObstructionSolution s = parse_solution(opt.solution, m.rows());
    std::vector<FactorCandidate> cands;
    try {
        cands = reconstruct_gram(m, s);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfertile;
    }
    if (opt.json_out) {
        json doc;
        doc["command"] = "factor";
        json list = json::array();
        for (const auto& c : cands) {
            json item;
            item["matrix"] = matrix_json(c.n_matrix);
            item["integer"] = c.is_integer;
            list.push_back(item);
        }
        doc["factors"] = list;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    bool first = true;
    for (const auto& c : cands) {
        if (!first) std::cout << "\n";
        first = false;
        std::cout << matrix_to_text(c.n_matrix);
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    Matrix m = read_matrix_file(opt.file);
    const std::size_t n = m.rows();
    if (!m.square()) throw DimensionError("verify: matrix must be square");
    SVParts p = decompose(m);

    std::vector<std::pair<std::string, bool>> results;
    results.emplace_back("decomposition round trip", recompose(p) == m);
    results.emplace_back("frobenius orthogonality",
                         frobenius_inner(s_part(p), v_part(p)) == 0);
    results.emplace_back("determinant via decomposition",
                         det_via_decomposition(m) == det(m));
    results.emplace_back("adjugate identity",
                         m * adjugate(m) == det(m) * Matrix::identity(n));
    {
        Rat w = adj_weightless_s(p.m0);
        results.emplace_back("weightless part adjugate constant",
                             adjugate(p.m0) == w * Matrix::ones(n));
    }
    if (is_type_s(m))
        results.emplace_back("determinant via weight", det_via_weight(m) == det(m));
    if (n <= 7)
        results.emplace_back("co-latin fast/slow agreement",
                             colatin_check(m) == colatin_check_fast(m));

    bool all_pass = true;
    if (opt.json_out) {
        json doc;
        doc["command"] = "verify";
        json list = json::array();
        for (const auto& [name, ok] : results) {
            list.push_back({{"identity", name}, {"pass", ok}});
            all_pass = all_pass && ok;
        }
        doc["identities"] = list;
        doc["all_pass"] = all_pass;
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& [name, ok] : results) {
            std::cout << (ok ? "pass" : "FAIL") << "  " << name << "\n";
            all_pass = all_pass && ok;
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_det(const Options& opt) {
    Matrix m = read_matrix_file(opt.file);
    Rat d = det(m);
    if (opt.json_out) {
        json doc;
        doc["command"] = "det";
        doc["det"] = to_string(d);
        doc["det_via_decomposition"] = to_string(det_via_decomposition(m));
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << to_string(d) << "\n";
    }
    return 0;
}

int cmd_adjugate(const Options& opt) {
    Matrix m = read_matrix_file(opt.file);
    Matrix a = adjugate(m);
    if (opt.json_out) {
        json doc;
        doc["command"] = "adjugate";
        doc["adjugate"] = matrix_json(a);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << matrix_to_text(a);
    }
    return 0;
}

int cmd_colatin(const Options& opt) {
    Matrix m = read_matrix_file(opt.file);
    bool fast = colatin_check_fast(m);
    bool have_slow = m.rows() <= 7;
    bool slow = have_slow ? colatin_check(m) : false;
    if (opt.json_out) {
        json doc;
        doc["command"] = "colatin";
        doc["fast"] = fast;
        if (have_slow) doc["transversal"] = slow;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "fast: " << (fast ? "co-latin" : "not co-latin") << "\n";
        if (have_slow)
            std::cout << "transversal: " << (slow ? "co-latin" : "not co-latin") << "\n";
    }
    return 0;
}

int cmd_latin(const Options& opt) {
    if (opt.n <= 0) throw std::invalid_argument("latin needs -n > 0");
    LatinSquare l = opt.kind == "corner"
                        ? corner_latin(static_cast<std::size_t>(opt.n))
                        : hankel_latin(static_cast<std::size_t>(opt.n));
    if (opt.json_out) {
        json doc;
        doc["command"] = "latin";
        doc["kind"] = opt.kind;
        doc["n"] = l.n;
        doc["cells"] = l.cells;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    for (const auto& row : l.cells) {
        for (std::size_t j = 0; j < row.size(); ++j)
            std::cout << (j ? " " : "") << row[j];
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact matrix decomposition and Gram-factorisation toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json_out, "structured JSON output");
    app.add_option("--threads", opt.threads, "worker threads (0 = all cores)");

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", opt.file, "matrix file")->required();
    };

    auto* dec = app.add_subcommand("decompose", "split a matrix into its S and V parts");
    add_file(dec);

    auto* obs = app.add_subcommand("obstruct", "build the factorisation obstruction equation");
    add_file(obs);
    obs->add_option("--mode", opt.mode, "gram|square")->default_val("gram");

    auto* sol = app.add_subcommand("solve", "enumerate obstruction solutions");
    add_file(sol);
    sol->add_option("--mode", opt.mode, "gram|square")->default_val("gram");
    sol->add_option("--box", opt.box, "search box for square mode");
    sol->add_flag("--count-only", opt.count_only, "print the count only");

    auto* fac = app.add_subcommand("factor", "reconstruct factors N with N^T N = M");
    add_file(fac);
    fac->add_option("--solution", opt.solution, "obstruction tuple \"w x1 ... x{n-1}\"");
    fac->add_flag("--all", opt.all, "full pipeline with class summary");

    auto* ver = app.add_subcommand("verify", "run the identity suite on a matrix");
    add_file(ver);

    auto* det_cmd = app.add_subcommand("det", "exact determinant");
    add_file(det_cmd);

    auto* adj = app.add_subcommand("adjugate", "exact adjugate");
    add_file(adj);

    auto* col = app.add_subcommand("colatin", "co-Latin property checks");
    add_file(col);

    auto* lat = app.add_subcommand("latin", "generate a Latin square");
    lat->add_option("--kind", opt.kind, "hankel|corner")->default_val("hankel");
    lat->add_option("-n", opt.n, "order")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (dec->parsed()) return cmd_decompose(opt);
        if (obs->parsed()) return cmd_obstruct(opt);
        if (sol->parsed()) return cmd_solve(opt);
        if (fac->parsed()) return cmd_factor(opt);
        if (ver->parsed()) return cmd_verify(opt);
        if (det_cmd->parsed()) return cmd_det(opt);
        if (adj->parsed()) return cmd_adjugate(opt);
        if (col->parsed()) return cmd_colatin(opt);
        if (lat->parsed()) return cmd_latin(opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
