#include "plateau/cli.hpp"

#include "plateau/boundary.hpp"
#include "plateau/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>

namespace plateau {

namespace {

using json = nlohmann::ordered_json;

struct CommonOpts {
    std::string cls = "A";
    long lambda = 2;
};

DoubleCover cover_of(const CommonOpts& c) {
    return canonical_cover(class_from_letter(c.cls[0]), c.lambda);
}

const char* order_name(Order o) {
    switch (o) {
        case Order::Less: return "Less";
        case Order::Equal: return "Equal";
        case Order::Greater: return "Greater";
        case Order::Prefix: return "Prefix";
    }
    return "?";
}

json rect_json(const ParamRect& r) {
    return json{{"a_lo", to_string(r.a_lo)},
                {"a_hi", to_string(r.a_hi)},
                {"b_lo", to_string(r.b_lo)},
                {"b_hi", to_string(r.b_hi)}};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + path);
    f << text;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const OracleError& e) {
        err << "oracle failure: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"boundary of chaos for plateau maps over expanding double covers"};
    app.require_subcommand(1);
    CommonOpts common;

    // order
    auto* order_cmd = app.add_subcommand("order", "compare two symbol sequences in <_s");
    std::vector<std::string> order_seqs;
    order_cmd->add_option("--class", common.cls);
    order_cmd->add_option("seqs", order_seqs)->expected(2);

    // compat
    auto* compat_cmd = app.add_subcommand("compat", "test a kneading pair for compatibility");
    std::vector<std::string> compat_seqs;
    compat_cmd->add_option("--class", common.cls);
    compat_cmd->add_option("seqs", compat_seqs)->expected(2);

    // words
    auto* words_cmd = app.add_subcommand("words", "balanced word and its boundary words");
    std::string pq = "1/2";
    words_cmd->add_option("--pq", pq);

    // cascade
    auto* cascade_cmd = app.add_subcommand("cascade", "anharmonic periods and prefix");
    int cascade_n = 3;
    cascade_cmd->add_option("--class", common.cls);
    cascade_cmd->add_option("--n", cascade_n);

    // entropy / dimension
    auto* entropy_cmd = app.add_subcommand("entropy", "exact entropy of a plateau map");
    auto* dim_cmd = app.add_subcommand("dimension", "survivor-set Hausdorff dimension");
    std::string a_str = "1/2", b_str = "1/2", fmt = "text", out_path;
    int cyl_n = 0;
    for (auto* cmd : {entropy_cmd, dim_cmd}) {
        cmd->add_option("--class", common.cls);
        cmd->add_option("--lambda", common.lambda);
        cmd->add_option("--a", a_str);
        cmd->add_option("--b", b_str);
        cmd->add_option("--format", fmt);
    }
    dim_cmd->add_option("--n", cyl_n, "also report the cylinder estimate at this length");

    // boxes
    auto* boxes_cmd = app.add_subcommand("boxes", "renormalization box tree");
    int depth = 1, q_max = 5, n_max = 5;
    boxes_cmd->add_option("--class", common.cls);
    boxes_cmd->add_option("--lambda", common.lambda);
    boxes_cmd->add_option("--depth", depth);
    boxes_cmd->add_option("--qmax", q_max);
    boxes_cmd->add_option("--nmax", n_max);
    boxes_cmd->add_option("--format", fmt);
    boxes_cmd->add_option("--out", out_path);

    // trace
    auto* trace_cmd = app.add_subcommand("trace", "boundary-of-chaos polyline");
    std::string cmin = "4/5", cmax = "6/5", tol = "1/4096";
    int steps = 41, jobs = 1;
    trace_cmd->add_option("--class", common.cls);
    trace_cmd->add_option("--lambda", common.lambda);
    trace_cmd->add_option("--cmin", cmin);
    trace_cmd->add_option("--cmax", cmax);
    trace_cmd->add_option("--steps", steps);
    trace_cmd->add_option("--tol", tol);
    trace_cmd->add_option("--jobs", jobs);
    trace_cmd->add_option("--out", out_path);

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify a boundary parameter");
    classify_cmd->add_option("--class", common.cls);
    classify_cmd->add_option("--lambda", common.lambda);
    classify_cmd->add_option("--a", a_str);
    classify_cmd->add_option("--b", b_str);
    classify_cmd->add_option("--depth", depth);
    classify_cmd->add_option("--qmax", q_max);
    classify_cmd->add_option("--nmax", n_max);

    // anharmonic
    auto* anharm_cmd = app.add_subcommand("anharmonic", "anharmonic cascade enclosure");
    anharm_cmd->add_option("--class", common.cls);
    anharm_cmd->add_option("--lambda", common.lambda);
    anharm_cmd->add_option("--b", b_str);
    anharm_cmd->add_option("--tol", tol);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        err << e.get_name() << ": " << app.help() << "\n";
        return 2;
    }

    if (*order_cmd) {
        MapClass cls = class_from_letter(common.cls[0]);
        Order o = compare(cls, SymbolSequence::parse(order_seqs[0]),
                          SymbolSequence::parse(order_seqs[1]));
        out << order_name(o) << "\n";
        return 0;
    }
    if (*compat_cmd) {
        MapClass cls = class_from_letter(common.cls[0]);
        KneadingInvariant k{SymbolSequence::parse(compat_seqs[0]),
                            SymbolSequence::parse(compat_seqs[1])};
        out << (is_compatible_pair(cls, k) ? "true" : "false") << "\n";
        return 0;
    }
    if (*words_cmd) {
        Rational r = parse_rational(pq);
        long p = numerator(r).convert_to<long>();
        long q = denominator(r).convert_to<long>();
        SymbolSequence w = balanced_word(p, q);
        SturmianBounds sb = sturmian_bounds(p, q);
        out << "omega=" << w.str() << "\n";
        out << "r-=" << sb.r_minus << "\n";
        out << "r+=" << sb.r_plus << "\n";
        out << "M=" << sb.max_shift.str() << "\n";
        out << "m=" << sb.min_shift.str() << "\n";
        return 0;
    }
    if (*cascade_cmd) {
        MapClass cls = class_from_letter(common.cls[0]);
        auto periods = cascade_periods(cls, cascade_n);
        for (size_t i = 0; i < periods.size(); ++i) out << (i ? " " : "") << periods[i];
        out << "\n";
        size_t plen = std::max<size_t>(16, periods.back().convert_to<size_t>());
        plen = std::min<size_t>(plen, 200);
        out << "k- prefix: " << anharmonic_prefix(cls, plen) << "\n";
        return 0;
    }
    if (*entropy_cmd) {
        DoubleCover cover = cover_of(common);
        PlateauConfig cfg = make_plateau(cover, parse_rational(a_str), parse_rational(b_str));
        MarkovSystem sys = build_markov(cfg);
        EntropyResult r = entropy(sys);
        if (fmt == "json") {
            json j{{"positive", r.positive},
                   {"value", r.value},
                   {"bound", r.bound},
                   {"matrix_size", r.matrix_size}};
            out << j.dump(2) << "\n";
        } else {
            out << "positive=" << (r.positive ? "true" : "false") << " value=" << r.value
                << " bound=" << r.bound << " matrix=" << r.matrix_size << "\n";
        }
        return 0;
    }
    if (*dim_cmd) {
        DoubleCover cover = cover_of(common);
        Rational a = parse_rational(a_str), b = parse_rational(b_str);
        DimensionResult r = survivor_dimension(cover, a, b);
        if (fmt == "json") {
            json j{{"positive", r.positive},
                   {"value", r.value},
                   {"bound", r.bound},
                   {"method", "markov_exact"},
                   {"matrix_size", r.matrix_size}};
            if (cyl_n > 0) {
                DimensionResult c = cylinder_dimension(cover, a, b, cyl_n);
                j["cylinder"] = json{{"n", c.n},
                                     {"count", std::to_string(cylinder_count(cover, a, b, cyl_n))},
                                     {"value", c.value}};
            }
            out << j.dump(2) << "\n";
        } else {
            out << "positive=" << (r.positive ? "true" : "false") << " value=" << r.value
                << " bound=" << r.bound << " method=markov_exact matrix=" << r.matrix_size
                << "\n";
            if (cyl_n > 0) {
                DimensionResult c = cylinder_dimension(cover, a, b, cyl_n);
                out << "cylinder n=" << c.n << " count=" << cylinder_count(cover, a, b, cyl_n)
                    << " value=" << c.value << "\n";
            }
        }
        return 0;
    }
    if (*boxes_cmd) {
        DoubleCover cover = cover_of(common);
        BoxTree tree = box_tree(cover, depth, q_max, n_max);
        json j;
        j["class"] = std::string(1, class_letter(cover.cls));
        j["lambda"] = common.lambda;
        j["depth"] = depth;
        j["level_counts"] = tree.level_counts;
        json arr = json::array();
        for (const ParamBox& b : tree.boxes) {
            if (b.depth == 0) continue;
            json jb{{"depth", b.depth},
                    {"class", std::string(1, class_letter(b.cls))},
                    {"label", b.label},
                    {"w_minus", b.w_minus},
                    {"w_plus", b.w_plus},
                    {"rect", rect_json(b.rect)},
                    {"parent", b.parent}};
            arr.push_back(std::move(jb));
        }
        j["boxes"] = std::move(arr);
        std::string text = j.dump(2) + "\n";
        if (!out_path.empty() && fmt != "svg") {
            write_text(out_path, text);
        } else {
            out << text;  // JSON always lands before any SVG writing
        }
        if (fmt == "svg") {
            if (out_path.empty()) throw std::invalid_argument("--format svg needs --out");
            write_text(out_path, boxes_svg(cover, tree));
        }
        return 0;
    }
    if (*trace_cmd) {
        DoubleCover cover = cover_of(common);
        auto pts = trace(cover, parse_rational(cmin), parse_rational(cmax), steps,
                         parse_rational(tol), jobs);
        std::ostringstream csv;
        csv << "c,a_lo,a_hi,b_lo,b_hi,verdict_checks\n";
        for (const auto& p : pts) {
            csv << to_string(p.c) << "," << to_string(p.a_lo) << "," << to_string(p.a_hi) << ","
                << to_string(p.b_lo()) << "," << to_string(p.b_hi()) << "," << p.verdict_checks
                << "\n";
        }
        if (!out_path.empty()) write_text(out_path, csv.str());
        else out << csv.str();
        return 0;
    }
    if (*classify_cmd) {
        DoubleCover cover = cover_of(common);
        PlateauConfig cfg = make_plateau(cover, parse_rational(a_str), parse_rational(b_str));
        Classification c = classify_point(cfg, depth, q_max, n_max);
        json j;
        j["class"] = classification_name(c.type);
        j["path"] = c.path;
        j["depth"] = c.depth;
        if (c.segment) {
            j["segment"] = json{{"form", c.segment->form},
                                {"pq", c.segment->pq_label},
                                {"pinned", c.segment->a_pinned ? "a" : "b"},
                                {"pinned_value", to_string(c.segment->pinned)},
                                {"t_lo", to_string(c.segment->t_lo)},
                                {"t_hi", to_string(c.segment->t_hi)},
                                {"k_minus", c.segment->k_minus.str()},
                                {"k_plus", c.segment->k_plus.str()}};
        }
        if (c.rotation) {
            j["rotation"] = json{{"lo", to_string(c.rotation->lo)},
                                 {"hi", to_string(c.rotation->hi)},
                                 {"exact", c.rotation->exact}};
        }
        if (c.type == Classification::Type::anharmonic_point)
            j["tail_class"] = std::string(1, class_letter(c.tail_class));
        out << j.dump(2) << "\n";
        return c.type == Classification::Type::truncation_limit ? 3 : 0;
    }
    if (*anharm_cmd) {
        DoubleCover cover = cover_of(common);
        AnharmonicResult r =
            anharmonic_point(cover, cover.cls, parse_rational(b_str), parse_rational(tol));
        json j;
        json arr = json::array();
        for (size_t i = 0; i < r.nested_a.size(); ++i) {
            arr.push_back(json{{"a_lo", to_string(r.nested_a[i].lo)},
                               {"a_hi", to_string(r.nested_a[i].hi)},
                               {"b_lo", to_string(r.nested_b[i].lo)},
                               {"b_hi", to_string(r.nested_b[i].hi)}});
        }
        j["nested"] = std::move(arr);
        j["enclosure"] = json{{"lo", to_string(r.enclosure.lo)}, {"hi", to_string(r.enclosure.hi)}};
        j["b_segment_inner"] = json{{"lo", to_string(r.b_segment_inner.lo)},
                                    {"hi", to_string(r.b_segment_inner.hi)}};
        j["b_on_segment"] = r.b_on_segment;
        out << j.dump(2) << "\n";
        return 0;
    }
    err << app.help() << "\n";
    return 2;
}

}  // namespace

}  // namespace plateau
