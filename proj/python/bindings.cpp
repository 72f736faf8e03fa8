#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permcodes/permcodes.hpp"

namespace py = pybind11;
using namespace permcodes;

namespace {

py::object to_py(const BigInt& v) {
    const std::string s = v.str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_py(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(boost::multiprecision::numerator(r)), to_py(boost::multiprecision::denominator(r)));
}

BigInt big_from_py(const py::int_& v) { return BigInt(std::string(py::str(v))); }

py::tuple bound_pair(const BoundValue& b) { return py::make_tuple(to_py(b.value), to_py(b.rounded)); }

py::object cell(const BoundCell& c) {
    if (!c.applicable()) return py::none();
    return bound_pair(*c.bound);
}

using Rows = std::vector<std::vector<Code>>;

Rows matrix_rows(const MatrixGF& m) {
    Rows out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
    return out;
}

std::vector<Permutation> perms_from(const std::vector<std::vector<int>>& rows) {
    std::vector<Permutation> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.emplace_back(r);
    return out;
}

std::vector<std::vector<int>> perms_to(const std::vector<Permutation>& perms) {
    std::vector<std::vector<int>> out;
    out.reserve(perms.size());
    for (const auto& p : perms) out.push_back(p.images());
    return out;
}

py::object distance_to_py(std::size_t d) {
    if (d == kInfiniteDistance) return py::float_(std::numeric_limits<double>::infinity());
    return py::int_(d);
}

py::dict certificate_dict(const Certificate& c) {
    py::dict d;
    for (const auto& [key, value] : parse_certificate(format_certificate(c))) d[py::str(key)] = value;
    d["bound"] = to_py(c.bound);
    d["guaranteed_floor"] = to_py(c.guaranteed_floor);
    d["bucket_size"] = c.bucket_size;
    d["verified_distance"] = distance_to_py(c.verified_distance);
    return d;
}

} // namespace

PYBIND11_MODULE(_permcodes, m) {
    m.doc() = "Permutation codes from parity-check matrices of linear codes";

    auto base = py::register_exception<Error>(m, "PermcodesError", PyExc_ValueError);
    py::register_exception<NotAPrimePower>(m, "NotAPrimePower", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
    py::register_exception<PreconditionViolated>(m, "PreconditionViolated", base.ptr());
    py::register_exception<VerificationFailed>(m, "VerificationFailed", base.ptr());
    py::register_exception<NotFound>(m, "NotFound", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    m.def("is_prime_power", &is_prime_power);
    m.def("next_prime", &next_prime);
    m.def("next_prime_power", &next_prime_power);
    m.def("factor_prime_power", [](std::int64_t q) {
        const auto pp = factor_prime_power(q);
        return py::make_tuple(pp.p, pp.m);
    });

    py::class_<GaloisField, std::shared_ptr<GaloisField>>(m, "GaloisField")
        .def(py::init([](std::int64_t q) { return std::const_pointer_cast<GaloisField>(field_make(q)); }))
        .def_property_readonly("order", &GaloisField::order)
        .def_property_readonly("characteristic", &GaloisField::characteristic)
        .def_property_readonly("degree", &GaloisField::degree)
        .def_property_readonly("modulus", &GaloisField::modulus)
        .def("add", &GaloisField::add)
        .def("sub", &GaloisField::sub)
        .def("neg", &GaloisField::neg)
        .def("mul", &GaloisField::mul)
        .def("inv", &GaloisField::inv)
        .def("div", &GaloisField::div)
        .def("pow", &GaloisField::pow)
        .def("__repr__", [](const GaloisField& f) { return "GaloisField(" + std::to_string(f.order()) + ")"; });

    py::class_<LinearCode>(m, "LinearCode")
        .def(py::init([](std::uint32_t q, const Rows& rows) {
                 return LinearCode(MatrixGF::from_rows(field_make(q), rows));
             }),
             py::arg("q"), py::arg("generator"))
        .def_property_readonly("q", &LinearCode::q)
        .def_property_readonly("n", &LinearCode::length)
        .def_property_readonly("k", &LinearCode::dimension)
        .def_property_readonly("generator", [](const LinearCode& c) { return matrix_rows(c.generator()); })
        .def_property_readonly("parity_check", [](const LinearCode& c) { return matrix_rows(parity_check(c)); })
        .def("min_distance",
             [](const LinearCode& c, std::uint64_t budget) { return *c.verified(budget).known_distance(); },
             py::arg("budget") = kDefaultCodeBudget)
        .def("singleton_defect",
             [](const LinearCode& c, std::uint64_t budget) { return singleton_defect(c.verified(budget)); },
             py::arg("budget") = kDefaultCodeBudget)
        .def("dual", [](const LinearCode& c) { return dual(c); })
        .def("is_orthogonal", [](const LinearCode& c, const FieldVector& w) { return c.is_orthogonal(w); })
        .def("to_text", [](const LinearCode& c) { return format_code(c); })
        .def_static("from_text", &parse_code)
        .def("__repr__", [](const LinearCode& c) {
            return "LinearCode([" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]_" +
                   std::to_string(c.q()) + ")";
        });

    m.def("reed_solomon", &reed_solomon, py::arg("q"), py::arg("n"), py::arg("k"),
          py::arg("budget") = kDefaultCodeBudget);
    m.def("extended_rs", &extended_rs, py::arg("q"), py::arg("k"), py::arg("budget") = kDefaultCodeBudget);
    m.def("is_mds", &is_mds, py::arg("code"), py::arg("budget") = kDefaultCodeBudget);
    m.def("verify_dual_mds", &verify_dual_mds, py::arg("code"), py::arg("budget") = kDefaultCodeBudget);
    m.def("weight_distribution", &weight_distribution, py::arg("code"), py::arg("budget") = kDefaultCodeBudget);
    m.def("weight_spectrum", &weight_spectrum_check, py::arg("code"), py::arg("budget") = kDefaultCodeBudget);
    m.def("random_code_search", &random_code_search, py::arg("n"), py::arg("k"), py::arg("d"), py::arg("q"),
          py::arg("seed"), py::arg("trials") = 10000, py::arg("budget") = kDefaultCodeBudget);
    m.def("find_full_weight_dual_codeword", &find_full_weight_dual_codeword, py::arg("code"), py::arg("seed"),
          py::arg("budget") = 100000);
    m.def("normalize_first_row_ones",
          [](const LinearCode& c, const FieldVector& w) { return normalize_first_row_ones(c, w); });

    m.def("perm_hamming", [](const std::vector<int>& a, const std::vector<int>& b) {
        return perm_hamming(Permutation(a), Permutation(b));
    });
    m.def("min_pairwise_distance", [](const std::vector<std::vector<int>>& rows) {
        return distance_to_py(min_pairwise_distance(perms_from(rows)));
    });
    m.def("subgroup_K", [](std::size_t n, std::size_t q) {
        return perms_to(subgroup_K(ResidueSubgroupSpec::make(n, q)).members());
    });
    m.def("subgroup_order", [](std::size_t n, std::size_t q) { return to_py(ResidueSubgroupSpec::make(n, q).order()); });
    m.def("coset_representatives", [](std::size_t n, std::size_t q) { return perms_to(coset_representatives(n, q)); });
    m.def("phi", [](const std::vector<int>& sigma, std::uint32_t q, const Rows& h) {
        return phi(Permutation(sigma), MatrixGF::from_rows(field_make(q), h));
    });
    m.def("max_binary_code", [](std::size_t r, std::size_t d) { return max_binary_code(r, d).words; });
    m.def("brute_force_M", [](std::size_t n, std::size_t d) { return perms_to(brute_force_M(n, d).members()); });
    m.def(
        "max_code_in_K",
        [](std::size_t n, std::size_t q, std::size_t d, bool exact, std::uint64_t seed) {
            const auto mode = exact ? SearchMode::exact : SearchMode::greedy;
            return perms_to(max_code_in_K(ResidueSubgroupSpec::make(n, q), d, mode, 10'000'000, seed).members());
        },
        py::arg("n"), py::arg("q"), py::arg("d"), py::arg("exact") = true, py::arg("seed") = 0);
    m.def("binary_lift", [](const std::vector<std::uint8_t>& u) { return binary_lift(u).images(); });

    m.def(
        "construct",
        [](const LinearCode& code, const std::vector<std::vector<int>>& gamma, std::uint64_t seed, bool ones_row,
           std::optional<std::size_t> target_distance, std::uint64_t budget) {
            ConstructionOptions opts;
            opts.seed = seed;
            opts.assume_ones_row = ones_row;
            opts.target_distance = target_distance;
            opts.budget = budget;
            const std::size_t n = code.length();
            const auto res = construct_permutation_code(code, PermutationCode(n, perms_from(gamma)), opts);
            return py::make_tuple(perms_to(res.code.members()), certificate_dict(res.certificate));
        },
        py::arg("code"), py::arg("gamma"), py::arg("seed") = 0, py::arg("ones_row") = true,
        py::arg("target_distance") = py::none(), py::arg("budget") = 3628800);

    m.def("derangement", [](unsigned r) { return to_py(derangement(r)); });
    m.def("gv_lower", [](std::size_t n, std::size_t d) { return bound_pair(gv_lower(n, d)); });
    m.def("sphere_packing_upper", [](std::size_t n, std::size_t d) { return bound_pair(sphere_packing_upper(n, d)); });
    m.def("singleton_like_upper", [](std::size_t n, std::size_t d) { return bound_pair(singleton_like_upper(n, d)); });
    m.def("old_prime_lower", [](std::size_t n, std::size_t d) { return bound_pair(old_prime_lower(n, d)); });
    m.def("mds_lower", [](std::size_t n, std::size_t d) { return bound_pair(mds_lower(n, d)); });
    m.def("mds_plus1_lower", [](std::size_t n, std::size_t d) { return cell(mds_plus1_lower(n, d)); });
    m.def("amds_lower", [](std::size_t n, std::size_t d, std::uint32_t q, const py::int_& a2) {
        return bound_pair(amds_lower(n, d, q, big_from_py(a2)).bound);
    });
    m.def("ratio_new_old", [](std::size_t n, std::size_t d) {
        const auto r = ratio_new_old(n, d);
        return py::make_tuple(to_py(r.ratio), to_py(r.envelope));
    });

    m.def(
        "table",
        [](std::size_t d, std::size_t n_min, std::size_t n_max, const std::string& columns, const std::string& fmt) {
            TableRequest req;
            req.d = d;
            req.n_min = n_min;
            req.n_max = n_max;
            req.columns = parse_columns(columns);
            req.format = parse_format(fmt);
            return render_table(req, compute_table(req));
        },
        py::arg("d") = 6, py::arg("n_min") = 9, py::arg("n_max") = 21, py::arg("columns") = "mds,mds+1,old",
        py::arg("format") = "csv");
    m.def(
        "table_rows",
        [](std::size_t d, std::size_t n_min, std::size_t n_max, const std::string& columns) {
            TableRequest req;
            req.d = d;
            req.n_min = n_min;
            req.n_max = n_max;
            req.columns = parse_columns(columns);
            py::list out;
            for (const auto& row : compute_table(req)) {
                py::list cells;
                for (const auto& c : row.cells) cells.append(c ? to_py(*c) : py::none());
                out.append(py::make_tuple(row.n, cells));
            }
            return out;
        },
        py::arg("d") = 6, py::arg("n_min") = 9, py::arg("n_max") = 21, py::arg("columns") = "mds,mds+1,old");
}
