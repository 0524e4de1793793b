#include "brt/combinat.hpp"
#include "brt/io.hpp"
#include "brt/transform.hpp"
#include "brt/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace brt;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string chain = "brauer";
    int n = 3;
    std::string q;
    std::string format = "json";
    std::uint64_t seed = 1;
};

void add_common(CLI::App* sub, Common& c, bool with_q = true)
{
    sub->add_option("--chain", c.chain, "sn | brauer | tl | bmw")->check(CLI::IsMember({"sn", "brauer", "tl", "bmw"}));
    sub->add_option("-n", c.n, "algebra size")->check(CLI::Range(1, 12));
    if (with_q) sub->add_option("--q", c.q, "loop parameter p/q (default 10/3)");
    sub->add_option("--seed", c.seed, "seed for random coefficients");
}

ChainKind chain_of(const Common& c) { return parse_chain(c.chain); }

Scalar q_of(const Common& c)
{
    if (c.q.empty()) return Scalar(10, 3);
    if (c.chain == "sn") throw UsageError("--q: the symmetric group chain has no parameter");
    try {
        return parse_scalar(c.q);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--q: ") + e.what());
    }
}

void need_numeric(const Common& c, const std::string& cmd)
{
    if (c.chain == "bmw") throw UsageError(cmd + ": the bmw chain has structural support only (bratteli, dims, plan)");
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
}

json read_json(const std::string& path, const char* flag)
{
    std::ifstream f(path);
    if (!f) throw UsageError(std::string(flag) + ": cannot read " + path);
    try {
        return json::parse(f);
    } catch (const json::exception& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

int cmd_bratteli(const Common& c)
{
    if (c.format != "json" && c.format != "dot") throw UsageError("--format: bratteli supports json or dot");
    BratteliDiagram b(chain_of(c), c.n);
    if (c.format == "dot") {
        std::cout << to_dot(b);
        return 0;
    }
    json levels = json::array();
    for (int i = 0; i <= b.depth(); ++i) {
        json vs = json::array();
        for (int v = 0; v < b.level_size(i); ++v) vs.push_back({{"label", b.level(i)[v].str()}, {"dim", b.dim(i, v)}});
        json es = json::array();
        if (i > 0)
            for (auto [a, d] : b.edges(i)) es.push_back({a, d});
        levels.push_back({{"level", i}, {"vertices", vs}, {"edges_from_below", es}});
    }
    json out{{"chain", c.chain}, {"n", c.n}, {"vertices", b.vertex_count()}, {"edges", b.edge_count()}, {"levels", levels}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_dims(const Common& c)
{
    if (c.format != "json" && c.format != "csv") throw UsageError("--format: dims supports json or csv");
    ChainKind kind = chain_of(c);
    BratteliDiagram b(kind, c.n);
    bool ok = true;
    std::ostringstream csv;
    csv << "level,vertex,dim\n";
    json levels = json::array();
    for (int i = 0; i <= c.n; ++i) {
        json vs = json::object();
        for (int v = 0; v < b.level_size(i); ++v) {
            vs[b.level(i)[v].str()] = b.dim(i, v);
            csv << i << ",\"" << b.level(i)[v].str() << "\"," << b.dim(i, v) << "\n";
        }
        auto expect = algebra_dimension(kind, i);
        bool match = mpz_class(std::to_string(b.algebra_dim(i))) == expect;
        ok = ok && match;
        levels.push_back({{"level", i}, {"dims", vs}, {"sum_sq", b.algebra_dim(i)}, {"expected", expect.get_str()}, {"match", match}});
    }
    if (c.format == "csv")
        std::cout << csv.str();
    else
        std::cout << json{{"chain", c.chain}, {"n", c.n}, {"levels", levels}}.dump(2) << "\n";
    return ok ? 0 : 1;
}

json bound_json(const SovPlan& plan)
{
    return {{"predicted", plan.predicted_total.get_str()},
            {"paper", plan.paper.available ? json(plan.paper.total.get_str()) : json(nullptr)}};
}

int cmd_fft(const Common& c, const std::string& algo, const std::string& coeffs, const std::string& out)
{
    need_numeric(c, "fft");
    ChainKind kind = chain_of(c);
    Scalar q = q_of(c);
    AlgebraElement f;
    if (!coeffs.empty()) {
        CoefficientFile file;
        try {
            file = coeffs_from_json(read_json(coeffs, "--coeffs"));
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception& e) {
            throw UsageError(std::string("--coeffs: ") + e.what());
        }
        if (file.f.kind != kind || file.f.n != c.n) throw UsageError("--coeffs: file chain/size disagrees with --chain/-n");
        if (!c.q.empty() && file.q != q) throw UsageError("--coeffs: file q disagrees with --q");
        f = file.f;
        q = file.q;
    } else {
        std::mt19937_64 rng(c.seed);
        f = random_element(kind, c.n, rng);
    }
    auto rep = build_rep(kind, c.n, q);
    auto plan = sov_plan(kind, c.n, rep.bratteli);
    FourierEngine e(rep);
    auto res = algo == "naive" ? e.naive(f) : e.sov(f);
    json j = image_to_json(rep.bratteli, res.image);
    j["chain"] = c.chain;
    j["n"] = c.n;
    j["q"] = to_string(q);
    j["algo"] = algo;
    j["ops"] = {{"mul", res.ops.mul}, {"add", res.ops.add}};
    j["bound"] = bound_json(plan);
    emit(j.dump(2) + "\n", out);
    return 0;
}

int cmd_invert(const Common& c, const std::string& image, const std::string& out)
{
    need_numeric(c, "invert");
    ChainKind kind = chain_of(c);
    Scalar q = q_of(c);
    if (!within_gram_limit(kind, c.n)) throw UsageError("invert: dual basis is limited to brauer n<=4, tl n<=6, sn n<=5");
    json j = read_json(image, "--image");
    if (j.contains("q") && c.q.empty()) q = parse_scalar(j["q"].get<std::string>());
    auto rep = build_rep(kind, c.n, q);
    BlockForm img;
    try {
        img = image_from_json(rep.bratteli, j);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--image: ") + e.what());
    }
    auto f = inverse_ft(img, rep, gram_dual(rep));
    emit(coeffs_to_json(f, q).dump(2) + "\n", out);
    return 0;
}

int cmd_verify(const Common& c, const std::string& suite, int trials)
{
    need_numeric(c, "verify");
    VerifyOptions o{chain_of(c), c.n, q_of(c), c.seed, trials};
    std::vector<std::string> run;
    if (suite == "all")
        run = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end())
        run = {suite};
    else
        throw UsageError("--suite: unknown suite '" + suite + "'");
    bool ok = true;
    for (const auto& s : run) {
        auto r = run_suite(s, o);
        const char* tag = r.skipped ? "SKIP" : r.ok() ? "PASS" : "FAIL";
        std::cout << tag << " " << r.name << ": " << r.summary << "\n";
        for (const auto& f : r.failures) std::cout << "  violated: " << f << "\n";
        ok = ok && r.ok();
    }
    return ok ? 0 : 1;
}

int cmd_plan(const Common& c)
{
    if (c.format != "json" && c.format != "csv") throw UsageError("--format: plan supports json or csv");
    auto plan = sov_plan(chain_of(c), c.n);
    if (c.format == "csv") {
        std::cout << "level,stage,family,w_size,hom,cost\n";
        for (const auto& s : plan.stages) {
            std::string fam;
            for (const auto& x : s.family) fam += (fam.empty() ? "" : " ") + x;
            std::cout << s.level << "," << s.stage << "," << fam << "," << s.w_size << "," << s.hom << "," << s.cost.get_str() << "\n";
        }
        return 0;
    }
    json stages = json::array();
    for (const auto& s : plan.stages)
        stages.push_back({{"level", s.level}, {"stage", s.stage}, {"family", s.family}, {"w_size", s.w_size},
                          {"hom", s.hom}, {"cost", s.cost.get_str()}, {"quiver_arrows", s.shape.arrows.size()}});
    json j{{"chain", c.chain},
           {"n", c.n},
           {"dim", plan.dim.get_str()},
           {"stages", stages},
           {"predicted_reduced", plan.predicted_reduced.get_str()},
           {"predicted_total", plan.predicted_total.get_str()},
           {"paper_reduced", plan.paper.available ? json(plan.paper.reduced.get_str()) : json(nullptr)},
           {"paper_total", plan.paper.available ? json(plan.paper.total.get_str()) : json(nullptr)}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

template <class T>
T median(std::vector<T> v)
{
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

int cmd_bench(const Common& c, int n_min, int n_max, int trials)
{
    need_numeric(c, "bench");
    if (n_min < 1 || n_max < n_min) throw UsageError("--n-min/--n-max: need 1 <= n-min <= n-max");
    if (trials < 1) throw UsageError("--trials: need at least one trial");
    ChainKind kind = chain_of(c);
    Scalar q = q_of(c);
    std::mt19937_64 rng(c.seed);
    std::cout << "n,dim,naive_mul,sov_mul,sov_add,predicted,paper_bound,reduced_t\n";
    for (int n = n_min; n <= n_max; ++n) {
        auto rep = build_rep(kind, n, q);
        auto plan = sov_plan(kind, n, rep.bratteli);
        FourierEngine e(rep);
        std::vector<std::uint64_t> nm, sm, sa;
        for (int t = 0; t < trials; ++t) {
            auto f = random_element(kind, n, rng);
            auto a = e.naive(f), b = e.sov(f);
            if (a.image != b.image) throw std::logic_error("SOV and naive transforms disagree");
            nm.push_back(a.ops.mul);
            sm.push_back(b.ops.mul);
            sa.push_back(b.ops.add);
        }
        auto smul = median(sm);
        mpq_class reduced(mpz_class(std::to_string(smul)), plan.dim);
        reduced.canonicalize();
        std::cout << n << "," << plan.dim.get_str() << "," << median(nm) << "," << smul << "," << median(sa) << ","
                  << plan.predicted_total.get_str() << "," << (plan.paper.available ? plan.paper.total.get_str() : "") << ","
                  << reduced.get_str() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bratteli diagrams, adapted representations and separation-of-variables Fourier transforms"};
    app.require_subcommand(1);
    Common c;
    std::string algo = "sov", coeffs, out, image, suite = "all";
    int trials = 20, n_min = 2, n_max = 4;

    auto* bratteli = app.add_subcommand("bratteli", "print the Bratteli diagram");
    add_common(bratteli, c, false);
    bratteli->add_option("--format", c.format, "json | dot");

    auto* dims = app.add_subcommand("dims", "irreducible dimensions and the sum of squares");
    add_common(dims, c, false);
    dims->add_option("--format", c.format, "json | csv");

    auto* fft = app.add_subcommand("fft", "Fourier transform of a coefficient file (or seeded random input)");
    add_common(fft, c);
    fft->add_option("--algo", algo, "naive | sov")->check(CLI::IsMember({"naive", "sov"}));
    fft->add_option("--coeffs", coeffs, "coefficient JSON file");
    fft->add_option("--out", out, "write the image here instead of stdout");

    auto* invert = app.add_subcommand("invert", "recover coefficients from a Fourier image");
    add_common(invert, c);
    invert->add_option("--image", image, "image JSON file")->required();
    invert->add_option("--out", out, "write coefficients here instead of stdout");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, c);
    verify->add_option("--suite", suite, "all | relations | factor-set | hom-counts | hom-ratio | roundtrip | bounds | semisimple");
    verify->add_option("--trials", trials, "random inputs per randomized suite");

    auto* plan = app.add_subcommand("plan", "separation-of-variables schedule and predicted cost");
    add_common(plan, c, false);
    plan->add_option("--format", c.format, "json | csv");

    auto* bench = app.add_subcommand("bench", "operation counts over a range of sizes (CSV)");
    add_common(bench, c);
    bench->add_option("--n-min", n_min, "smallest size");
    bench->add_option("--n-max", n_max, "largest size");
    bench->add_option("--trials", trials, "random inputs per size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c.chain == "sn" && !c.q.empty()) throw UsageError("--q: the symmetric group chain has no parameter");
        if (bratteli->parsed()) return cmd_bratteli(c);
        if (dims->parsed()) return cmd_dims(c);
        if (fft->parsed()) return cmd_fft(c, algo, coeffs, out);
        if (invert->parsed()) return cmd_invert(c, image, out);
        if (verify->parsed()) return cmd_verify(c, suite, trials);
        if (plan->parsed()) return cmd_plan(c);
        if (bench->parsed()) return cmd_bench(c, n_min, n_max, trials);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
