#include "steklov/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "steklov/classify.hpp"
#include "steklov/error.hpp"
#include "steklov/flux.hpp"
#include "steklov/reduce.hpp"
#include "steklov/roots.hpp"
#include "steklov/spectral.hpp"
#include "steklov/tree.hpp"
#include "steklov/verify.hpp"

namespace steklov::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

// Quotes a CSV field only when needed.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

struct TreeInput {
    std::string shorthand;
    std::string file;

    Tree load() const {
        if (shorthand.empty() == file.empty()) throw CLI::ValidationError("give exactly one of a tree shorthand or --file");
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw ParseError("cannot open " + file);
            std::stringstream buf;
            buf << in.rdbuf();
            return parse_edge_list(buf.str());
        }
        return parse_tree(shorthand);
    }
};

void add_tree_input(CLI::App* sub, TreeInput& input) {
    sub->add_option("tree", input.shorthand, "tree shorthand: path:L, spider:3,2,1, ds:2,1/2, as:r,q,c,t");
    sub->add_option("--file", input.file, "read the tree from an edge-list file")->check(CLI::ExistingFile);
}

std::string label_of(const Tree& t) { return describe(t); }

// ---------------------------------------------------------------------------

int cmd_spectrum(const Tree& t, Format fmt, std::ostream& out) {
    const Spectrum sp = steklov_spectrum(t);
    switch (fmt) {
        case Format::Text:
            out << "tree: " << label_of(t) << "\n";
            out << "order: " << t.order() << "\n";
            out << "leaves: " << sp.eigenvalues.size() << "\n";
            out << "eigenvalues:\n";
            for (double x : sp.eigenvalues) out << "  " << num(x) << "\n";
            break;
        case Format::Csv:
            out << "index,eigenvalue\n";
            for (std::size_t i = 0; i < sp.eigenvalues.size(); ++i) out << i + 1 << "," << num(sp.eigenvalues[i]) << "\n";
            break;
        case Format::Json: {
            Json j;
            j["tree"] = label_of(t);
            j["edge_list"] = to_edge_list(t);
            Json ev = Json::array();
            for (double x : sp.eigenvalues) ev.push_back(num(x));
            j["eigenvalues"] = ev;
            out << j.dump(2) << "\n";
            break;
        }
    }
    return kOk;
}

std::vector<std::pair<std::string, double>> lambda2_methods(const Tree& t, const std::string& method) {
    std::vector<std::pair<std::string, double>> rows;
    auto root = [&]() -> double {
        if (auto s = recognize_spider(t); s && s->lengths()[0] > s->lengths()[1]) return spider_lambda2(*s).value;
        if (auto d = recognize_double_spider(t); d && d->balanced_principal())
            return 1.0 / double_spider_rho(*d).value;
        throw DomainError("no scalar root equation for " + label_of(t) +
                          " (needs a spider with l1 > l2 or a double spider with a1 = b1 >= all lengths)");
    };
    if (method == "matrix" || method == "all") rows.emplace_back("matrix", lambda2_numeric(t));
    if (method == "distance" || method == "all") rows.emplace_back("distance", lambda2_via_distance(t));
    if (method == "root") rows.emplace_back("root", root());
    if (method == "all") {
        try {
            rows.emplace_back("root", root());
        } catch (const DomainError&) {
        }
    }
    return rows;
}

int cmd_lambda2(const Tree& t, const std::string& method, Format fmt, std::ostream& out) {
    const auto rows = lambda2_methods(t, method);
    switch (fmt) {
        case Format::Text:
            if (rows.size() == 1) {
                out << num(rows[0].second) << "\n";
            } else {
                for (const auto& [m, v] : rows) out << m << " " << num(v) << "\n";
            }
            break;
        case Format::Csv:
            out << "method,lambda2\n";
            for (const auto& [m, v] : rows) out << m << "," << num(v) << "\n";
            break;
        case Format::Json: {
            Json j;
            j["tree"] = label_of(t);
            j["edge_list"] = to_edge_list(t);
            Json vals = Json::object();
            for (const auto& [m, v] : rows) vals[m] = num(v);
            j["lambda2"] = vals;
            out << j.dump(2) << "\n";
            break;
        }
    }
    return kOk;
}

std::string params_text(const std::optional<ASParams>& p) { return p ? to_shorthand(*p) : std::string("-"); }

int cmd_classify(int n, int D, Format fmt, std::ostream& out) {
    const ClassificationResult res = classify(n, D);
    auto is_winner = [&](std::size_t i) {
        return std::find(res.winners.begin(), res.winners.end(), i) != res.winners.end();
    };
    switch (fmt) {
        case Format::Text: {
            out << "n=" << res.n << " D=" << res.D << " r=" << res.r << " s=" << res.s << " M=" << res.M << "\n";
            out << "case: " << to_string(res.case_tag) << "\n";
            if (res.k) out << "k=" << *res.k << " t=" << *res.t << "\n";
            if (res.threshold) {
                out << "regime: " << to_string(res.threshold->regime);
                if (res.threshold->zeta) out << " zeta=" << num(*res.threshold->zeta);
                if (res.threshold->kappa) out << " kappa=" << num(*res.threshold->kappa);
                out << "\n";
            }
            out << "candidates:\n";
            for (std::size_t i = 0; i < res.candidates.size(); ++i) {
                const auto& c = res.candidates[i];
                out << "  " << c.label << " " << label_of(c.tree) << " " << params_text(c.params)
                    << " lambda2=" << num(c.lambda2) << (is_winner(i) ? " winner" : "") << "\n";
            }
            std::vector<std::string> names;
            for (std::size_t w : res.winners) names.push_back(label_of(res.candidates[w].tree));
            out << "winner: " << join(names, " ") << "\n";
            out << "lambda2: " << num(res.best_lambda2()) << "\n";
            if (res.tie_flag) out << "tie: numerically tied winners\n";
            break;
        }
        case Format::Csv:
            out << "case,q,candidate,lambda2,winner\n";
            for (std::size_t i = 0; i < res.candidates.size(); ++i) {
                const auto& c = res.candidates[i];
                out << to_string(res.case_tag) << "," << c.q << "," << csv_field(label_of(c.tree)) << "," << num(c.lambda2)
                    << "," << (is_winner(i) ? 1 : 0) << "\n";
            }
            break;
        case Format::Json: {
            Json j;
            j["n"] = res.n;
            j["D"] = res.D;
            j["r"] = res.r;
            j["s"] = res.s;
            j["M"] = res.M;
            j["case"] = to_string(res.case_tag);
            if (res.k) {
                j["k"] = *res.k;
                j["t"] = *res.t;
            }
            if (res.threshold) {
                Json th;
                th["regime"] = to_string(res.threshold->regime);
                if (res.threshold->zeta) th["zeta"] = num(*res.threshold->zeta);
                if (res.threshold->kappa) th["kappa"] = num(*res.threshold->kappa);
                j["threshold"] = th;
            }
            Json cands = Json::array();
            for (std::size_t i = 0; i < res.candidates.size(); ++i) {
                const auto& c = res.candidates[i];
                Json jc;
                jc["label"] = c.label;
                jc["shape"] = label_of(c.tree);
                jc["params"] = params_text(c.params);
                jc["q"] = c.q;
                jc["lambda2"] = num(c.lambda2);
                jc["winner"] = is_winner(i);
                jc["edge_list"] = to_edge_list(c.tree);
                cands.push_back(jc);
            }
            j["candidates"] = cands;
            j["lambda2"] = num(res.best_lambda2());
            j["tie"] = res.tie_flag;
            out << j.dump(2) << "\n";
            break;
        }
    }
    return kOk;
}

int cmd_candidates(int n, int D, Format fmt, std::ostream& out) {
    const CandidateProfiles cp = candidate_profiles(n, D);
    struct Row {
        std::string label;
        int q;
        std::string params;
        std::string shape;
    };
    std::vector<Row> rows;
    if (std::holds_alternative<PathOnly>(cp)) {
        rows.push_back({"path", 0, "-", "path:" + std::to_string(D)});
    } else {
        const auto& pair = std::get<CandidatePair>(cp);
        rows.push_back({"q-", pair.q_minus, to_shorthand(pair.as_minus), to_shorthand(pair.as_minus.profile())});
        if (!pair.coincide())
            rows.push_back({"q+", pair.q_plus, to_shorthand(pair.as_plus), to_shorthand(pair.as_plus.profile())});
    }
    switch (fmt) {
        case Format::Text:
            if (const auto* pair = std::get_if<CandidatePair>(&cp))
                out << "n=" << n << " D=" << D << " r=" << pair->r << " s=" << pair->s << " M=" << pair->M
                    << " q-=" << pair->q_minus << " q+=" << pair->q_plus << "\n";
            else
                out << "n=" << n << " D=" << D << " M=0\n";
            for (const auto& r : rows) out << "  " << r.label << " " << r.params << " " << r.shape << "\n";
            break;
        case Format::Csv:
            out << "label,q,params,shape\n";
            for (const auto& r : rows)
                out << r.label << "," << r.q << "," << csv_field(r.params) << "," << csv_field(r.shape) << "\n";
            break;
        case Format::Json: {
            Json j;
            j["n"] = n;
            j["D"] = D;
            Json arr = Json::array();
            for (const auto& r : rows) arr.push_back({{"label", r.label}, {"q", r.q}, {"params", r.params}, {"shape", r.shape}});
            j["candidates"] = arr;
            out << j.dump(2) << "\n";
            break;
        }
    }
    return kOk;
}

int cmd_sweep(int r, int m_max, Format fmt, std::ostream& out) {
    if (r < 1 || m_max < 1) throw DomainError("sweep needs r >= 1 and M-max >= 1");
    std::vector<UnimodalityReport> reports;
    for (int M = 1; M <= m_max; ++M) reports.push_back(verify_unimodality(r, M));
    bool all_pass = true;
    for (const auto& rep : reports) all_pass = all_pass && rep.pass;

    switch (fmt) {
        case Format::Text:
            for (const auto& rep : reports) {
                const auto& s = rep.sweep;
                out << "r=" << s.r << " M=" << s.M << " q-=" << s.q_minus << " q+=" << s.q_plus << " argmax=" << s.argmax_q
                    << " unimodal=" << (rep.pass ? "pass" : "fail") << (s.tie_flag ? " tie" : "") << "\n";
                for (const auto& row : s.rows)
                    out << "  q=" << row.q << " " << to_shorthand(row.params) << " sigma=" << num(row.sigma) << "\n";
                if (!rep.pass) out << "  " << rep.detail << "\n";
            }
            out << "overall: " << (all_pass ? "pass" : "fail") << "\n";
            break;
        case Format::Csv:
            out << "r,M,q,c,t,sigma,argmax,unimodal\n";
            for (const auto& rep : reports)
                for (const auto& row : rep.sweep.rows)
                    out << r << "," << rep.sweep.M << "," << row.q << "," << row.params.c << "," << row.params.t << ","
                        << num(row.sigma) << "," << (row.q == rep.sweep.argmax_q ? 1 : 0) << ","
                        << (rep.pass ? "pass" : "fail") << "\n";
            break;
        case Format::Json: {
            Json arr = Json::array();
            for (const auto& rep : reports) {
                const auto& s = rep.sweep;
                Json js;
                js["M"] = s.M;
                js["q_minus"] = s.q_minus;
                js["q_plus"] = s.q_plus;
                js["argmax_q"] = s.argmax_q;
                js["tie"] = s.tie_flag;
                js["pass"] = rep.pass;
                if (!rep.pass) js["detail"] = rep.detail;
                Json rows = Json::array();
                for (const auto& row : s.rows)
                    rows.push_back({{"q", row.q}, {"c", row.params.c}, {"t", row.params.t}, {"sigma", num(row.sigma)}});
                js["rows"] = rows;
                arr.push_back(js);
            }
            Json j;
            j["r"] = r;
            j["sweeps"] = arr;
            j["pass"] = all_pass;
            out << j.dump(2) << "\n";
            break;
        }
    }
    return all_pass ? kOk : kMismatch;
}

int cmd_reduce(const Tree& t, Format fmt, std::ostream& out) {
    const AscentTrace trace = greedy_ascent(t);
    switch (fmt) {
        case Format::Text:
            for (std::size_t i = 0; i < trace.steps.size(); ++i) {
                const auto& s = trace.steps[i];
                out << i << " " << s.move << " " << s.shape << " lambda2=" << num(s.lambda2) << "\n";
            }
            out << "result: " << label_of(trace.result) << "\n";
            break;
        case Format::Csv:
            out << "step,move,shape,lambda2\n";
            for (std::size_t i = 0; i < trace.steps.size(); ++i) {
                const auto& s = trace.steps[i];
                out << i << "," << s.move << "," << csv_field(s.shape) << "," << num(s.lambda2) << "\n";
            }
            break;
        case Format::Json: {
            Json steps = Json::array();
            for (const auto& s : trace.steps) steps.push_back({{"move", s.move}, {"shape", s.shape}, {"lambda2", num(s.lambda2)}});
            Json j;
            j["input"] = to_edge_list(t);
            j["steps"] = steps;
            j["result"] = label_of(trace.result);
            j["result_edge_list"] = to_edge_list(trace.result);
            out << j.dump(2) << "\n";
            break;
        }
    }
    return kOk;
}

int cmd_verify(int n, int D, bool all_orders, int jobs, bool timing, Format fmt, std::ostream& out) {
    if (D % 2 == 0 || D < 3) throw DomainError("verify needs odd D >= 3");
    if (n < D + 1) throw DomainError("verify needs n >= D + 1");
    std::vector<VerificationReport> reports;
    for (int m = all_orders ? D + 1 : n; m <= n; ++m) reports.push_back(verify_classification(m, D, jobs));
    bool any_mismatch = false;
    for (const auto& rep : reports) any_mismatch = any_mismatch || rep.verdict == Verdict::Mismatch;

    switch (fmt) {
        case Format::Text:
            for (const auto& rep : reports) {
                out << "n=" << rep.n << " D=" << rep.D << " trees=" << rep.trees_enumerated
                    << " verdict=" << to_string(rep.verdict) << "\n";
                out << "  case: " << rep.case_tag << "\n";
                out << "  argmax: " << join(rep.argmax_shapes, " ") << " lambda2=" << num(rep.argmax_lambda2) << "\n";
                out << "  classifier: " << join(rep.classifier_shapes, " ") << "\n";
                out << "  spiders: " << (rep.winners_are_spiders ? "yes" : "no") << "\n";
                if (timing) out << "  wall_time: " << num(rep.wall_time) << "\n";
            }
            break;
        case Format::Csv:
            out << "n,D,trees,case,argmax,classifier,lambda2,verdict" << (timing ? ",wall_time" : "") << "\n";
            for (const auto& rep : reports) {
                out << rep.n << "," << rep.D << "," << rep.trees_enumerated << "," << rep.case_tag << ","
                    << csv_field(join(rep.argmax_shapes, " ")) << "," << csv_field(join(rep.classifier_shapes, " ")) << ","
                    << num(rep.argmax_lambda2) << "," << to_string(rep.verdict);
                if (timing) out << "," << num(rep.wall_time);
                out << "\n";
            }
            break;
        case Format::Json: {
            Json arr = Json::array();
            for (const auto& rep : reports) {
                Json j;
                j["n"] = rep.n;
                j["D"] = rep.D;
                j["trees_enumerated"] = rep.trees_enumerated;
                j["case"] = rep.case_tag;
                j["argmax_shapes"] = rep.argmax_shapes;
                j["argmax_codes"] = rep.argmax_codes;
                j["argmax_lambda2"] = num(rep.argmax_lambda2);
                j["classifier_shapes"] = rep.classifier_shapes;
                j["classifier_codes"] = rep.classifier_codes;
                j["winners_are_spiders"] = rep.winners_are_spiders;
                j["verdict"] = to_string(rep.verdict);
                if (timing) j["wall_time"] = num(rep.wall_time);
                arr.push_back(j);
            }
            Json j;
            j["reports"] = arr;
            out << j.dump(2) << "\n";
            break;
        }
    }
    return any_mismatch ? kMismatch : kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Steklov spectra of trees with leaf boundary", "steklov"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    app.add_option("--format", format_name, "text, csv, or json")->check(CLI::IsMember({"text", "csv", "json"}));

    TreeInput tree_in;
    std::string method = "matrix";
    int n = 0, D = 0, r = 0, m_max = 0;
    int jobs = default_jobs();
    bool all_orders = false, timing = false;

    auto* spectrum = app.add_subcommand("spectrum", "full Steklov spectrum");
    add_tree_input(spectrum, tree_in);

    auto* lambda2 = app.add_subcommand("lambda2", "second Steklov eigenvalue");
    add_tree_input(lambda2, tree_in);
    lambda2->add_option("--method", method, "matrix, distance, root, or all")
        ->check(CLI::IsMember({"matrix", "distance", "root", "all"}));

    auto* classify_cmd = app.add_subcommand("classify", "extremal trees for order n and odd diameter D");
    classify_cmd->add_option("n", n)->required();
    classify_cmd->add_option("D", D)->required();

    auto* candidates = app.add_subcommand("candidates", "candidate profiles for (n, D)");
    candidates->add_option("n", n)->required();
    candidates->add_option("D", D)->required();

    auto* sweep = app.add_subcommand("sweep", "Sigma_{r,M} tables with unimodality verdicts");
    sweep->add_option("--r", r)->required();
    sweep->add_option("--M-max", m_max)->required();

    auto* reduce = app.add_subcommand("reduce", "greedy ascent trace");
    add_tree_input(reduce, tree_in);

    auto* verify = app.add_subcommand("verify", "brute-force check of the classification");
    verify->add_option("n", n)->required();
    verify->add_option("D", D)->required();
    verify->add_flag("--all-orders", all_orders, "check every order from D+1 to n");
    verify->add_option("--jobs", jobs, "worker threads (default STEKLOV_JOBS or 1)")->check(CLI::PositiveNumber);
    verify->add_flag("--timing", timing, "include wall times (not byte-stable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const Format fmt = format_name == "csv" ? Format::Csv : format_name == "json" ? Format::Json : Format::Text;
    try {
        if (*spectrum) return cmd_spectrum(tree_in.load(), fmt, out);
        if (*lambda2) return cmd_lambda2(tree_in.load(), method, fmt, out);
        if (*classify_cmd) return cmd_classify(n, D, fmt, out);
        if (*candidates) return cmd_candidates(n, D, fmt, out);
        if (*sweep) return cmd_sweep(r, m_max, fmt, out);
        if (*reduce) return cmd_reduce(tree_in.load(), fmt, out);
        if (*verify) return cmd_verify(n, D, all_orders, jobs, timing, fmt, out);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

}  // namespace steklov::cli
