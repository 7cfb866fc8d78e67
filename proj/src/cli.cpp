#include "cycov/cli.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "cycov/covers.hpp"
#include "cycov/curves.hpp"
#include "cycov/equations.hpp"
#include "cycov/errors.hpp"
#include "cycov/io.hpp"

namespace cycov::cli {

namespace {

long long powll(long long base, int exponent) {
    long long result = 1;
    for (int i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

CyclicCurve curve_from_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{')
        return curve_from_json_text(arg);
    return load_curve_file(arg);
}

ExponentVector vector_from_csv(const CyclicCurve& curve, const std::string& csv) {
    const std::vector<int> raw = parse_int_list(csv);
    return reduce(std::vector<long long>(raw.begin(), raw.end()), curve.degree());
}

OrderedJson vector_to_json(const ExponentVector& v) {
    OrderedJson out = OrderedJson::array();
    for (std::size_t k = 0; k < v.size(); ++k)
        out.push_back(v[k]);
    return out;
}

std::string int_list_text(const std::vector<int>& values) {
    std::string out = "(";
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k > 0)
            out += ",";
        out += std::to_string(values[k]);
    }
    return out + ")";
}

int cmd_curve_info(const CyclicCurve& curve, bool json, std::ostream& out) {
    const int genus = base_genus(curve);
    const long long covers = powll(curve.degree().value(),
                                   static_cast<int>(curve.branch_count()) - 2) - 1;
    const std::string equation = equation_text(base_equation(curve));
    if (json) {
        OrderedJson report;
        report["d"] = curve.degree().value();
        report["r"] = curve.branch_count();
        report["genus"] = genus;
        report["covers"] = covers;
        report["equation"] = equation;
        out << report.dump() << "\n";
        return 0;
    }
    out << "d: " << curve.degree().value() << "\n";
    out << "r: " << curve.branch_count() << "\n";
    out << "genus: " << genus << "\n";
    out << "covers: " << covers << "\n";
    out << "equation: " << equation << "\n";
    return 0;
}

int cmd_covers_list(const CyclicCurve& curve, bool json, std::ostream& out) {
    const std::vector<CoverSpec> covers = all_covers(curve);
    if (json) {
        OrderedJson report;
        report["count"] = covers.size();
        OrderedJson items = OrderedJson::array();
        for (const CoverSpec& cover : covers)
            items.push_back(vector_to_json(cover.beta()));
        report["covers"] = std::move(items);
        out << report.dump() << "\n";
        return 0;
    }
    out << "covers: " << covers.size() << "\n";
    for (const CoverSpec& cover : covers)
        out << exponent_vector_text(cover.beta()) << "\n";
    return 0;
}

int cmd_covers_classes(const CyclicCurve& curve, bool json, std::ostream& out) {
    const std::vector<IsoClass> classes = iso_classes(curve);
    if (json) {
        OrderedJson report;
        report["count"] = classes.size();
        OrderedJson items = OrderedJson::array();
        for (const IsoClass& cls : classes) {
            OrderedJson item;
            item["canonical"] = vector_to_json(cls.canonical);
            item["size"] = cls.members.size();
            item["quotient_genera"] = cls.quotient_genera;
            OrderedJson members = OrderedJson::array();
            for (const ExponentVector& member : cls.members)
                members.push_back(vector_to_json(member));
            item["members"] = std::move(members);
            items.push_back(std::move(item));
        }
        report["classes"] = std::move(items);
        out << report.dump() << "\n";
        return 0;
    }
    out << "classes: " << classes.size() << "\n";
    for (const IsoClass& cls : classes) {
        out << exponent_vector_text(cls.canonical) << " size " << cls.members.size()
            << " quotient_genera " << int_list_text(cls.quotient_genera) << " members";
        for (const ExponentVector& member : cls.members)
            out << " " << exponent_vector_text(member);
        out << "\n";
    }
    return 0;
}

int cmd_covers_count_support(const CyclicCurve& curve, int k, bool include_trivial, bool json,
                             std::ostream& out) {
    const long long oracle = count_by_support_oracle(curve, k, include_trivial);
    const long long corrected =
        count_formula_corrected(curve.degree(), static_cast<int>(curve.branch_count()), k);
    const BigRational paper =
        count_formula_paper(curve.degree(), static_cast<int>(curve.branch_count()), k);
    if (json) {
        OrderedJson report;
        report["k"] = k;
        report["oracle"] = oracle;
        report["formula_corrected"] = corrected;
        report["formula_paper"] = paper.to_string();
        out << report.dump() << "\n";
        return 0;
    }
    out << "k: " << k << "\n";
    out << "oracle: " << oracle << "\n";
    out << "formula_corrected: " << corrected << "\n";
    out << "formula_paper: " << paper.to_string() << "\n";
    return 0;
}

int cmd_covers_count_genus(const CyclicCurve& curve, int g0, bool json, std::ostream& out) {
    const QuotientGenusListing listing = covers_by_quotient_genus(curve, g0);
    if (json) {
        OrderedJson report;
        report["g0"] = g0;
        if (!listing.diagnostic.empty())
            report["diagnostic"] = listing.diagnostic;
        else
            report["k"] = 2 * g0 / (curve.degree().value() - 1) + 2;
        report["count"] = listing.vectors.size();
        OrderedJson items = OrderedJson::array();
        for (const ExponentVector& v : listing.vectors)
            items.push_back(vector_to_json(v));
        report["vectors"] = std::move(items);
        out << report.dump() << "\n";
        return 0;
    }
    out << "g0: " << g0 << "\n";
    if (!listing.diagnostic.empty())
        out << "diagnostic: " << listing.diagnostic << "\n";
    else
        out << "k: " << 2 * g0 / (curve.degree().value() - 1) + 2 << "\n";
    out << "count: " << listing.vectors.size() << "\n";
    for (const ExponentVector& v : listing.vectors)
        out << exponent_vector_text(v) << "\n";
    return 0;
}

int emit_equations(const EquationSystem& system, bool json, bool display, std::ostream& out) {
    if (json)
        out << equation_to_json_text(system) << "\n";
    else if (display)
        out << display_equation_text(system) << "\n";
    else
        out << equation_text(system) << "\n";
    return 0;
}

int cmd_change_of_coords(const CyclicCurve& curve, const std::string& beta1_csv,
                         const std::string& beta2_csv, bool json, std::ostream& out) {
    const ExponentVector beta1 = vector_from_csv(curve, beta1_csv);
    const ExponentVector beta2 = vector_from_csv(curve, beta2_csv);
    const CoordinateChange change = coordinate_change(curve.alpha(), beta1, beta2);

    std::string change_text = "z' = zeta_" + std::to_string(change.root_of_unity_order) +
                              " * y^" + std::to_string(change.j) + "/z";
    for (std::size_t k = 0; k < change.extraction_exponents.size(); ++k) {
        const int e = change.extraction_exponents[k];
        if (e == 0)
            continue;
        change_text += " * (x - " + curve.branch_points()[k].to_string() + ")^" +
                       std::to_string(-e);
    }

    if (json) {
        OrderedJson report;
        report["j"] = change.j;
        report["extraction_exponents"] = change.extraction_exponents;
        report["root_of_unity_order"] = change.root_of_unity_order;
        report["change"] = change_text;
        out << report.dump() << "\n";
        return 0;
    }
    out << "j: " << change.j << "\n";
    out << "extraction_exponents: " << int_list_text(change.extraction_exponents) << "\n";
    out << "change: " << change_text << "\n";
    return 0;
}

int cmd_transform(const CyclicCurve& curve, std::size_t i, std::size_t j, bool do_verify,
                  bool json, std::ostream& out, std::ostream& err) {
    const TwoPointTransform transform = two_point_transform(curve, i, j);
    const EquationSystem system = transformed_equation(curve, transform);
    const RationalFunction x_map = transform_x_map(curve, transform);
    bool identity = true;
    if (do_verify)
        identity = verify_two_point_identity(curve, transform);

    if (json) {
        OrderedJson report;
        report["i"] = i;
        report["j"] = j;
        OrderedJson cs = OrderedJson::array();
        for (const auto& [k, c] : transform.c_values) {
            OrderedJson entry;
            entry["k"] = k;
            entry["c"] = c.to_string();
            cs.push_back(std::move(entry));
        }
        report["c_values"] = std::move(cs);
        report["new_exponents"] = transform.new_exponents;
        report["exponent_sum"] = transform.exponent_sum;
        report["pivot_difference"] = transform.pivot_difference.to_string();
        report["equation"] = equation_to_json(system);
        report["x_numerator"] = polynomial_text(x_map.numerator(), "t");
        report["x_denominator"] = polynomial_text(x_map.denominator(), "t");
        if (do_verify)
            report["identity_holds"] = identity;
        out << report.dump() << "\n";
    } else {
        out << "i: " << i << "\n";
        out << "j: " << j << "\n";
        for (const auto& [k, c] : transform.c_values)
            out << "c[" << k << "] = " << c.to_string() << "\n";
        out << "transformed: " << equation_text(system) << "\n";
        out << "x(t) = (" << polynomial_text(x_map.numerator(), "t") << ")/("
            << polynomial_text(x_map.denominator(), "t") << ")\n";
        if (do_verify)
            out << "identity: " << (identity ? "PASS" : "FAIL") << "\n";
    }
    if (do_verify && !identity) {
        err << "error: InternalInconsistency: two-point identity failed\n";
        return 1;
    }
    return 0;
}

int cmd_rational_cover(int d, const std::string& f1_csv, const std::string& f2_csv, bool json,
                       bool display, std::ostream& out) {
    const Polynomial f1(parse_rational_list(f1_csv));
    const Polynomial f2(parse_rational_list(f2_csv));
    return emit_equations(rational_cover_from_factors(PrimeDegree(d), f1, f2), json, display,
                          out);
}

struct VerifySuite {
    const CyclicCurve& curve;
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> notes;

    template <typename Body>
    void check(const std::string& name, Body&& body) {
        bool pass = false;
        try {
            pass = body();
        } catch (const std::exception&) {
            pass = false;
        }
        checks.emplace_back(name, pass);
    }
};

void run_verify_suite(VerifySuite& suite) {
    const CyclicCurve& curve = suite.curve;
    const PrimeDegree d = curve.degree();
    const int dv = d.value();
    const int r = static_cast<int>(curve.branch_count());
    const ExponentVector& alpha = curve.alpha();

    suite.check("genus_routes", [&] {
        return expected_branch_count(base_genus(curve), d) == r;
    });

    suite.check("coset_count", [&] {
        std::set<std::vector<int>> canonicals;
        for (const ExponentVector& v : enumerate_degree_zero(d, r))
            canonicals.insert(coset_canonical(v, alpha).entries());
        return static_cast<long long>(canonicals.size()) == powll(dv, r - 2) &&
               static_cast<long long>(all_covers(curve).size()) == powll(dv, r - 2) - 1;
    });

    suite.check("cover_genus_relation", [&] {
        const int g = base_genus(curve);
        for (const CoverSpec& cover : all_covers(curve))
            if (cover_genus(cover) != dv * (g - 1) + 1)
                return false;
        return true;
    });

    suite.check("counting_formula", [&] {
        bool ok = true;
        for (int k = 1; k <= r; ++k) {
            const long long oracle = count_by_support_oracle(curve, k, true);
            const long long corrected = count_formula_corrected(d, r, k);
            if (oracle != corrected)
                ok = false;
            const BigRational paper = count_formula_paper(d, r, k);
            if (paper != BigRational(corrected))
                suite.notes.push_back("k=" + std::to_string(k) + ": paper formula gives " +
                                      paper.to_string() + ", oracle and corrected formula give " +
                                      std::to_string(corrected));
        }
        return ok;
    });

    suite.check("counting_total", [&] {
        long long total = 0;
        for (int k = 0; k <= r; ++k)
            total += count_by_support_oracle(curve, k, true);
        return total == powll(dv, r - 1);
    });

    suite.check("iso_partition", [&] {
        const std::vector<IsoClass> classes = iso_classes(curve);
        const long long vectors = powll(dv, r - 1) - dv;
        const std::size_t class_size = (dv == 2) ? 2 : static_cast<std::size_t>(2 * dv);
        if (static_cast<long long>(classes.size()) !=
            (dv == 2 ? vectors / 2 : (powll(dv, r - 2) - 1) / 2))
            return false;
        std::set<std::vector<int>> seen;
        for (const IsoClass& cls : classes) {
            if (cls.members.size() != class_size)
                return false;
            if (cls.canonical != *std::min_element(cls.members.begin(), cls.members.end()))
                return false;
            for (const ExponentVector& member : cls.members) {
                if (!isomorphic_as_covers(cls.canonical, member, alpha))
                    return false;
                if (!seen.insert(member.entries()).second)
                    return false;
            }
        }
        return static_cast<long long>(seen.size()) == vectors;
    });

    suite.check("quotient_genera_invariant", [&] {
        const int g = base_genus(curve);
        for (const IsoClass& cls : iso_classes(curve)) {
            for (const ExponentVector& member : cls.members) {
                std::vector<int> genera;
                for (const auto& [vec, genus] :
                     intermediate_quotients(CoverSpec(curve, member)))
                    genera.push_back(genus);
                std::sort(genera.begin(), genera.end());
                if (genera != cls.quotient_genera)
                    return false;
                if (dv == 2 && genera[0] + genera[1] != g - 1)
                    return false;
            }
        }
        return true;
    });

    suite.check("coordinate_change_oriented", [&] {
        for (const ExponentVector& beta1 : enumerate_degree_zero(d, r)) {
            if (span_membership(beta1, alpha).has_value())
                continue;
            for (int j = 0; j < dv; ++j) {
                const ExponentVector beta2 = linear_combine(j, alpha, -1, beta1);
                const CoordinateChange change = coordinate_change(alpha, beta1, beta2);
                if (change.j != j)
                    return false;
                for (int k = 0; k < r; ++k)
                    if (dv * change.extraction_exponents[static_cast<std::size_t>(k)] +
                            beta2[static_cast<std::size_t>(k)] !=
                        j * alpha[static_cast<std::size_t>(k)] -
                            beta1[static_cast<std::size_t>(k)])
                        return false;
            }
        }
        return true;
    });

    suite.check("coordinate_change_orientation", [&] {
        for (const ExponentVector& beta1 : enumerate_degree_zero(d, r)) {
            if (span_membership(beta1, alpha).has_value())
                continue;
            if (dv == 2) {
                if (coordinate_change(alpha, beta1, beta1).j != 0)
                    return false;
                continue;
            }
            try {
                coordinate_change(alpha, beta1, beta1);
                return false;
            } catch (const Error& e) {
                if (e.code() != errc::orientation_mismatch)
                    return false;
            }
        }
        return true;
    });

    suite.check("two_point_identity", [&] {
        for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i)
            for (std::size_t j = 0; j < static_cast<std::size_t>(r); ++j) {
                if (i == j)
                    continue;
                if (!verify_two_point_identity(curve, two_point_transform(curve, i, j)))
                    return false;
            }
        return true;
    });

    suite.check("two_point_perturbation", [&] {
        TwoPointTransform transform = two_point_transform(curve, 0, 1);
        transform.c_values[0].second += BigRational(1);
        return !verify_two_point_identity(curve, transform);
    });

    suite.check("transform_genus", [&] {
        for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i)
            for (std::size_t j = 0; j < static_cast<std::size_t>(r); ++j) {
                if (i == j)
                    continue;
                const TwoPointTransform transform = two_point_transform(curve, i, j);
                const ExponentVector datum = transformed_exponent_datum(curve, transform);
                const int datum_genus = genus_from_profile(ramification_profile(d, datum));
                const int direct =
                    cover_genus(CoverSpec(curve, two_point_cover_vector(curve, i, j)));
                if (datum_genus != direct)
                    return false;
            }
        return true;
    });

    suite.check("equation_round_trip", [&] {
        std::vector<EquationSystem> systems;
        systems.push_back(base_equation(curve));
        for (const CoverSpec& cover : all_covers(curve))
            systems.push_back(cover_equations(cover));
        for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i)
            for (std::size_t j = 0; j < static_cast<std::size_t>(r); ++j)
                if (i != j)
                    systems.push_back(
                        transformed_equation(curve, two_point_transform(curve, i, j)));
        for (const EquationSystem& system : systems) {
            const std::string text = equation_text(system);
            if (parse_equation_text(text) != system || equation_text(parse_equation_text(text)) != text)
                return false;
            const std::string json_text = equation_to_json_text(system);
            if (equation_from_json_text(json_text) != system ||
                equation_to_json_text(equation_from_json_text(json_text)) != json_text)
                return false;
        }
        return true;
    });
}

int cmd_verify(const CyclicCurve& curve, bool json, std::ostream& out, std::ostream& err) {
    VerifySuite suite{curve, {}, {}};
    run_verify_suite(suite);

    std::size_t failures = 0;
    for (const auto& [name, pass] : suite.checks)
        if (!pass)
            ++failures;

    if (json) {
        OrderedJson report;
        OrderedJson checks = OrderedJson::array();
        for (const auto& [name, pass] : suite.checks) {
            OrderedJson entry;
            entry["name"] = name;
            entry["pass"] = pass;
            checks.push_back(std::move(entry));
        }
        report["checks"] = std::move(checks);
        report["notes"] = suite.notes;
        report["failures"] = failures;
        out << report.dump() << "\n";
    } else {
        for (const auto& [name, pass] : suite.checks)
            out << (pass ? "PASS" : "FAIL") << " " << name << "\n";
        for (const std::string& note : suite.notes)
            out << "note: " << note << "\n";
    }
    if (failures > 0) {
        err << "error: InternalInconsistency: " << failures << " verification checks failed\n";
        return 1;
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"strongly cyclic covers of prime-degree cyclic curves"};
    app.require_subcommand(1);

    std::string curve_arg;
    std::string beta_csv;
    std::string beta1_csv;
    std::string beta2_csv;
    std::string f1_csv;
    std::string f2_csv;
    bool json = false;
    bool display = false;
    bool do_verify = false;
    bool include_trivial = false;
    int support_k = 0;
    int genus_g0 = 0;
    int rc_degree = 0;
    std::size_t pos_i = 0;
    std::size_t pos_j = 0;

    const std::string curve_help = "curve file path, or an inline JSON document";

    CLI::App* curve_cmd = app.add_subcommand("curve", "inspect a curve");
    curve_cmd->require_subcommand(1);
    CLI::App* info_cmd = curve_cmd->add_subcommand("info", "genus, branch data, equation");
    info_cmd->add_option("curve", curve_arg, curve_help)->required();
    info_cmd->add_flag("--json", json, "structured output");

    CLI::App* covers_cmd = app.add_subcommand("covers", "enumerate, classify, count covers");
    covers_cmd->require_subcommand(1);
    CLI::App* list_cmd = covers_cmd->add_subcommand("list", "one cover per torsion coset");
    list_cmd->add_option("curve", curve_arg, curve_help)->required();
    list_cmd->add_flag("--json", json, "structured output");
    CLI::App* classes_cmd = covers_cmd->add_subcommand("classes", "isomorphism classes");
    classes_cmd->add_option("curve", curve_arg, curve_help)->required();
    classes_cmd->add_flag("--json", json, "structured output");
    CLI::App* count_cmd = covers_cmd->add_subcommand("count", "count covers by support or genus");
    count_cmd->add_option("curve", curve_arg, curve_help)->required();
    CLI::Option_group* mode = count_cmd->add_option_group("mode");
    CLI::Option* support_opt = mode->add_option("--support", support_k, "support size k");
    CLI::Option* genus_opt = mode->add_option("--genus", genus_g0, "quotient genus g0");
    mode->require_option(1);
    count_cmd->add_flag("--include-trivial", include_trivial,
                        "count multiples of alpha too (support mode)");
    count_cmd->add_flag("--json", json, "structured output");

    CLI::App* equations_cmd = app.add_subcommand("equations", "emit defining equations");
    equations_cmd->require_subcommand(1);
    CLI::App* base_cmd = equations_cmd->add_subcommand("base", "the curve's own equation");
    base_cmd->add_option("curve", curve_arg, curve_help)->required();
    base_cmd->add_flag("--json", json, "structured output");
    base_cmd->add_flag("--display", display, "superscript rendering");
    CLI::App* cover_cmd = equations_cmd->add_subcommand("cover", "base plus cover relation");
    cover_cmd->add_option("curve", curve_arg, curve_help)->required();
    cover_cmd->add_option("--beta", beta_csv, "cover exponents, comma separated")->required();
    cover_cmd->add_flag("--json", json, "structured output");
    cover_cmd->add_flag("--display", display, "superscript rendering");

    CLI::App* coords_cmd =
        app.add_subcommand("change-of-coords", "coordinate change between isomorphic covers");
    coords_cmd->add_option("curve", curve_arg, curve_help)->required();
    coords_cmd->add_option("--beta1", beta1_csv, "first cover exponents")->required();
    coords_cmd->add_option("--beta2", beta2_csv, "second cover exponents")->required();
    coords_cmd->add_flag("--json", json, "structured output");

    CLI::App* transform_cmd =
        app.add_subcommand("transform", "two-point transform at branch positions i, j");
    transform_cmd->add_option("curve", curve_arg, curve_help)->required();
    transform_cmd->add_option("--i", pos_i, "first branch position")->required();
    transform_cmd->add_option("--j", pos_j, "second branch position")->required();
    transform_cmd->add_flag("--verify", do_verify, "check the d-th power identity");
    transform_cmd->add_flag("--json", json, "structured output");

    CLI::App* rc_cmd =
        app.add_subcommand("rational-cover", "cover from a rational factorization");
    rc_cmd->add_option("--d", rc_degree, "prime degree")->required();
    rc_cmd->add_option("--f1", f1_csv, "first factor coefficients, lowest degree first")
        ->required();
    rc_cmd->add_option("--f2", f2_csv, "second factor coefficients, lowest degree first")
        ->required();
    rc_cmd->add_flag("--json", json, "structured output");
    rc_cmd->add_flag("--display", display, "superscript rendering");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the invariant suite on a curve");
    verify_cmd->add_option("curve", curve_arg, curve_help)->required();
    verify_cmd->add_flag("--json", json, "structured output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (info_cmd->parsed())
            return cmd_curve_info(curve_from_arg(curve_arg), json, out);
        if (list_cmd->parsed())
            return cmd_covers_list(curve_from_arg(curve_arg), json, out);
        if (classes_cmd->parsed())
            return cmd_covers_classes(curve_from_arg(curve_arg), json, out);
        if (count_cmd->parsed()) {
            const CyclicCurve curve = curve_from_arg(curve_arg);
            if (support_opt->count() > 0)
                return cmd_covers_count_support(curve, support_k, include_trivial, json, out);
            (void)genus_opt;
            return cmd_covers_count_genus(curve, genus_g0, json, out);
        }
        if (base_cmd->parsed())
            return emit_equations(base_equation(curve_from_arg(curve_arg)), json, display, out);
        if (cover_cmd->parsed()) {
            const CyclicCurve curve = curve_from_arg(curve_arg);
            const CoverSpec cover(curve, vector_from_csv(curve, beta_csv));
            return emit_equations(cover_equations(cover), json, display, out);
        }
        if (coords_cmd->parsed())
            return cmd_change_of_coords(curve_from_arg(curve_arg), beta1_csv, beta2_csv, json,
                                        out);
        if (transform_cmd->parsed())
            return cmd_transform(curve_from_arg(curve_arg), pos_i, pos_j, do_verify, json, out,
                                 err);
        if (rc_cmd->parsed())
            return cmd_rational_cover(rc_degree, f1_csv, f2_csv, json, display, out);
        if (verify_cmd->parsed())
            return cmd_verify(curve_from_arg(curve_arg), json, out, err);
        err << "error: InvalidArgument: no subcommand selected\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: InternalInconsistency: " << e.what() << "\n";
        return 1;
    }
}

} // namespace cycov::cli
