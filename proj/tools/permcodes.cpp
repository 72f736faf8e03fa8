// permcodes command-line front end.
//
// Exit codes: 0 success, 1 usage or parse error, 2 infeasible parameters,
// 3 verification failure, 4 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "permcodes/permcodes.hpp"

using namespace permcodes;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInfeasible = 2, kVerification = 3, kBudget = 4 };

// Writes to the --out path when given, stdout otherwise.
void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write " + path);
    out << text;
}

struct TableArgs {
    std::size_t d = 6;
    std::size_t n_min = 9;
    std::size_t n_max = 21;
    std::string columns = "mds,mds+1,old";
    std::string format = "csv";
    std::string out;
};

int run_table(const TableArgs& a) {
    TableRequest req;
    req.d = a.d;
    req.n_min = a.n_min;
    req.n_max = a.n_max;
    req.columns = parse_columns(a.columns);
    req.format = parse_format(a.format);
    emit(a.out, render_table(req, compute_table(req)));
    return kOk;
}

struct ConstructArgs {
    std::size_t n = 0;
    std::optional<std::size_t> d;
    std::uint32_t q = 0;
    std::size_t k = 0;
    std::string source = "rs";
    std::string code_file;
    std::string gamma = "exact";
    std::optional<std::uint64_t> seed;
    std::uint64_t budget = 40320;
    bool no_ones_row = false;
    std::string out;
    std::string certificate;
};

LinearCode load_source(const ConstructArgs& a) {
    if (a.source == "rs") {
        if (a.n > a.q) throw PreconditionViolated("Reed-Solomon codes need n <= q");
        return reed_solomon(a.q, a.n, a.k);
    }
    if (a.source == "xrs") {
        if (a.n != static_cast<std::size_t>(a.q) + 1)
            throw PreconditionViolated("extended Reed-Solomon codes have n = q + 1");
        return extended_rs(a.q, a.k);
    }
    if (a.code_file.empty()) throw ParameterError("--source file needs --code-file");
    LinearCode code = load_code(a.code_file);
    if (code.length() != a.n || code.q() != a.q || code.dimension() != a.k)
        throw ParameterError("code file parameters differ from --n/--q/--k");
    return code;
}

PermutationCode build_gamma(const ConstructArgs& a, std::size_t d) {
    const auto spec = ResidueSubgroupSpec::make(a.n, a.q);
    if (a.gamma == "identity") return PermutationCode(a.n, {Permutation::identity(a.n)});
    if (a.gamma == "exact") return max_code_in_K(spec, d, SearchMode::exact);
    if (a.gamma == "greedy") return max_code_in_K(spec, d, SearchMode::greedy, 0, *a.seed);
    if (spec.s != 1) throw PreconditionViolated("--gamma lift needs q < n < 2q");
    std::vector<Permutation> members;
    for (const auto w : max_binary_code(spec.r, (d + 1) / 2).words) {
        std::vector<std::uint8_t> u(spec.r);
        for (std::size_t i = 0; i < spec.r; ++i) u[i] = (w >> i) & 1;
        members.push_back(binary_lift(u, spec));
    }
    return PermutationCode(a.n, members);
}

int run_construct(const ConstructArgs& a) {
    if (!a.seed) throw ParameterError("construct needs --seed");
    const LinearCode code = load_source(a).verified();
    const std::size_t d = a.d.value_or(*code.known_distance());
    const PermutationCode gamma = build_gamma(a, d);

    ConstructionOptions opts;
    opts.assume_ones_row = !a.no_ones_row;
    opts.seed = *a.seed;
    opts.budget = a.budget;
    opts.target_distance = d;
    const ConstructionResult res = construct_permutation_code(code, gamma, opts);

    const std::string cert = format_certificate(res.certificate);
    if (!a.out.empty()) emit(a.out, format_permutation_code(res.code));
    if (!a.certificate.empty()) emit(a.certificate, cert);
    if (a.certificate.empty() || a.certificate != "-") std::cout << cert;
    return kOk;
}

int run_verify(const std::string& path, std::size_t d) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot read " + path);
    const PermutationCodeFile file = read_permutation_code(in);
    const VerifyOutcome outcome = verify_permutation_code(file, d);
    std::cout << (outcome.passed ? "PASS " : "FAIL ") << outcome.message << '\n';
    return outcome.passed ? kOk : kVerification;
}

struct CompareArgs {
    std::string mode = "new-vs-old";
    std::string b = "4/5";
    std::string alpha = "2";
    std::vector<std::size_t> ns{17, 33, 65, 129};
    std::vector<std::uint32_t> qs{4, 8};
    std::uint64_t budget = 10'000'000;
    std::string format = "csv";
    std::string out;
};

int run_compare(const CompareArgs& a) {
    const TableFormat fmt = parse_format(a.format);
    const Rational b = parse_rational(a.b);
    if (a.mode == "new-vs-old") {
        emit(a.out, render_new_old(compare_new_old(a.ns, b), fmt));
    } else if (a.mode == "amds-vs-old") {
        emit(a.out, render_amds_old(compare_amds_old(a.qs, parse_rational(a.alpha), b, a.budget), fmt));
    } else {
        throw ParameterError("unknown compare mode '" + a.mode + "'");
    }
    return kOk;
}

int run_field(std::int64_t q, bool tables) {
    const FieldPtr f = field_make(q);
    std::ostringstream os;
    os << "q: " << f->order() << "\np: " << f->characteristic() << "\nm: " << f->degree() << "\nmodulus:";
    for (auto c : f->modulus()) os << ' ' << c;
    os << '\n';
    if (tables) {
        os << "add:\n";
        for (Code x = 0; x < f->order(); ++x) {
            for (Code y = 0; y < f->order(); ++y) os << (y ? " " : "") << f->add(x, y);
            os << '\n';
        }
        os << "mul:\n";
        for (Code x = 0; x < f->order(); ++x) {
            for (Code y = 0; y < f->order(); ++y) os << (y ? " " : "") << f->mul(x, y);
            os << '\n';
        }
    }
    std::cout << os.str();
    return kOk;
}

struct SearchArgs {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::uint32_t q = 0;
    std::optional<std::uint64_t> seed;
    std::uint64_t trials = 10000;
    std::uint64_t budget = kDefaultCodeBudget;
    std::string out;
};

int run_code_search(const SearchArgs& a) {
    if (!a.seed) throw ParameterError("code-search needs --seed");
    const auto code = random_code_search(a.n, a.k, a.d, a.q, *a.seed, a.trials, a.budget);
    if (!code) {
        std::cerr << "no [" << a.n << "," << a.k << "," << a.d << "]_" << a.q << " code found in " << a.trials
                  << " trials\n";
        return kInfeasible;
    }
    const CodeSummary s = summarize(*code);
    std::cerr << "found [" << s.n << "," << s.k << "," << s.d << "]_" << a.q << ", defect " << s.defect << '\n';
    emit(a.out, format_code(*code));
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutation codes from parity-check matrices of linear codes"};
    app.require_subcommand(1);

    TableArgs table;
    auto* t = app.add_subcommand("table", "Lower and upper bounds on M(n,d) over a range of n");
    t->add_option("--d", table.d, "Minimum distance")->capture_default_str();
    t->add_option("--n-min", table.n_min)->capture_default_str();
    t->add_option("--n-max", table.n_max)->capture_default_str();
    t->add_option("--columns", table.columns, "Subset of gv,sphere,singleton,old,mds,mds+1")->capture_default_str();
    t->add_option("--format", table.format, "csv or markdown")->capture_default_str();
    t->add_option("--out", table.out, "Output path (stdout by default)");

    ConstructArgs cons;
    auto* c = app.add_subcommand("construct", "Build a permutation code from a linear code");
    c->add_option("--n", cons.n)->required();
    c->add_option("--d", cons.d, "Target distance (defaults to the code's distance)");
    c->add_option("--q", cons.q)->required();
    c->add_option("--k", cons.k)->required();
    c->add_option("--source", cons.source)->check(CLI::IsMember({"rs", "xrs", "file"}))->capture_default_str();
    c->add_option("--code-file", cons.code_file, "Linear code file for --source file");
    c->add_option("--gamma", cons.gamma, "Code inside K: exact, greedy, lift or identity")
        ->check(CLI::IsMember({"exact", "greedy", "lift", "identity"}))
        ->capture_default_str();
    c->add_option("--seed", cons.seed, "Seed for randomized steps");
    c->add_option("--budget", cons.budget, "Cap on n! and on |T|")->capture_default_str();
    c->add_flag("--no-ones-row", cons.no_ones_row, "Skip the all-ones parity row normalization");
    c->add_option("--out", cons.out, "Permutation code output path");
    c->add_option("--certificate", cons.certificate, "Certificate output path");

    std::string verify_path;
    std::size_t verify_d = 0;
    auto* v = app.add_subcommand("verify", "Recompute the minimum distance of a permutation code file");
    v->add_option("file", verify_path)->required();
    v->add_option("--d", verify_d, "Required minimum distance")->required();

    CompareArgs cmp;
    auto* cm = app.add_subcommand("compare", "Exact ratios between bounds");
    cm->add_option("--mode", cmp.mode)->check(CLI::IsMember({"new-vs-old", "amds-vs-old"}))->capture_default_str();
    cm->add_option("--b", cmp.b, "Relative distance, e.g. 4/5 or 0.75")->capture_default_str();
    cm->add_option("--alpha", cmp.alpha, "n / q for amds-vs-old")->capture_default_str();
    cm->add_option("--n", cmp.ns, "Lengths for new-vs-old");
    cm->add_option("--q", cmp.qs, "Field sizes for amds-vs-old");
    cm->add_option("--budget", cmp.budget, "Clique search budget for A_2")->capture_default_str();
    cm->add_option("--format", cmp.format)->capture_default_str();
    cm->add_option("--out", cmp.out);

    std::int64_t field_q = 0;
    bool field_tables = false;
    auto* f = app.add_subcommand("field", "Describe GF(q)");
    f->add_option("--q", field_q)->required();
    f->add_flag("--tables", field_tables, "Print addition and multiplication tables");

    SearchArgs search;
    auto* s = app.add_subcommand("code-search", "Random search for an [n,k,d]_q linear code");
    s->add_option("--n", search.n)->required();
    s->add_option("--k", search.k)->required();
    s->add_option("--d", search.d)->required();
    s->add_option("--q", search.q)->required();
    s->add_option("--seed", search.seed);
    s->add_option("--trials", search.trials)->capture_default_str();
    s->add_option("--budget", search.budget)->capture_default_str();
    s->add_option("--out", search.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*t) return run_table(table);
        if (*c) return run_construct(cons);
        if (*v) return run_verify(verify_path, verify_d);
        if (*cm) return run_compare(cmp);
        if (*f) return run_field(field_q, field_tables);
        if (*s) return run_code_search(search);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const VerificationFailed& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerification;
    } catch (const Error& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    }
    return kUsage;
}
