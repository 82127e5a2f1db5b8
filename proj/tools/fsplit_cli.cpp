#include <CLI11.hpp>

#include <fsplit/errors.hpp>
#include <fsplit/serialize.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef FSPLIT_VERSION
#define FSPLIT_VERSION "0.0.0"
#endif

using namespace fsplit;

namespace
{

enum Exit { ok = 0, negative = 2, undecided = 3, input_error = 4 };

struct Options {
    std::string file;
    std::string out;
    std::string seeds;
    std::string at;
    std::string samples;
    std::string preset;
    std::string lemma;
    std::string proxy;
    bool random = false;
    bool at_origin = false;
    bool origin = false;
    bool timing = false;
    int trunc = -1;
    int pmax = 3;
    int qmax = 1;
    int k = -1;
    int r = 1;
    int s = 0;
    int p = 1;
    int q = 0;
    int h = -1;
    int j = 1;
    int degree = 3;
    std::uint64_t seed = 0;
};

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorCode::ParseError, "cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Instance load_instance(const Options &o)
{
    if (o.file.empty()) {
        fail(ErrorCode::InvalidParams, "an instance file is required");
    }
    Instance inst = instance_from_json(parse_json(read_file(o.file)));
    if (o.trunc >= 0) {
        if (o.trunc < inst.k) {
            fail(ErrorCode::InvalidParams, "--trunc must be at least k");
        }
        inst.trunc = o.trunc;
    }
    return inst;
}

// "w=1/2,u=3" or "w1=..,u2=..".
Point parse_point(const std::string &text, int r, int s)
{
    Point at;
    if (text.empty()) {
        return at;
    }
    at.w0.assign(static_cast<std::size_t>(r), Rational(0));
    at.u0.assign(static_cast<std::size_t>(s), Cyclotomic(0));
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            fail(ErrorCode::ParseError, "bad point entry '" + item + "'");
        }
        const std::string key = item.substr(0, eq);
        const Rational value = parse_rational(item.substr(eq + 1));
        std::size_t idx = 1;
        if (key.size() > 1) {
            try {
                idx = std::stoul(key.substr(1));
            } catch (const std::exception &) {
                fail(ErrorCode::ParseError, "bad point coordinate '" + key + "'");
            }
        }
        if (key[0] == 'w' && idx >= 1 && idx <= at.w0.size()) {
            at.w0[idx - 1] = value;
        } else if (key[0] == 'u' && idx >= 1 && idx <= at.u0.size()) {
            at.u0[idx - 1] = Cyclotomic(value);
        } else {
            fail(ErrorCode::ParseError, "unknown point coordinate '" + key + "'");
        }
    }
    return at;
}

std::vector<Form> load_seeds(const std::string &path, int m, int &p, int &q)
{
    const json j = parse_json(read_file(path));
    if (!j.is_object() || !j.contains("seeds") || !j.at("seeds").is_array()) {
        fail(ErrorCode::ParseError, "seeds file needs a \"seeds\" list");
    }
    p = j.value("p", 1);
    q = j.value("q", 0);
    std::vector<Form> out;
    for (const auto &row : j.at("seeds")) {
        if (!row.is_array() || static_cast<int>(row.size()) != m) {
            fail(ErrorCode::ParseError, "each seed lists one coefficient per x variable");
        }
        std::vector<LaurentSeries> coeffs;
        for (const auto &c : row) {
            coeffs.push_back(laurent_from_json(c));
        }
        out.push_back(Form::linear(coeffs));
    }
    return out;
}

int exit_for(SplitStatus s)
{
    switch (s) {
    case SplitStatus::Split:
        return ok;
    case SplitStatus::NonSplitEvidence:
        return negative;
    default:
        return undecided;
    }
}

int exit_for(const LemmaReport &rep)
{
    if (rep.conclusion == Conclusion::fails) {
        return negative;
    }
    return rep.hypothesis == Hypothesis::untestable ? undecided : ok;
}

struct Outcome {
    json result;
    int code = ok;
    std::optional<Instance> input;
};

Outcome run_split(const Options &o)
{
    const Instance inst = load_instance(o);
    const WeierstrassPoly f = inst.poly();
    const Point at = parse_point(o.at, f.r(), f.s());
    const WeierstrassPoly g = at.at_origin() ? f : translate_to_point(f, at);
    SplitResult res;
    if (!o.seeds.empty()) {
        int p = 1;
        int q = 0;
        const auto seeds = load_seeds(o.seeds, g.num_x(), p, q);
        res.p = p;
        res.q = q;
        try {
            res.root_system = lift_roots(g, seeds, p, q, g.trunc());
            res.status = product_matches(g, res.root_system->roots) ? SplitStatus::Split : SplitStatus::NonSplitEvidence;
            if (res.status != SplitStatus::Split) {
                res.root_system.reset();
            }
        } catch (const Error &e) {
            if (e.code() == ErrorCode::DimensionMismatch || e.code() == ErrorCode::InvalidParams) {
                throw;
            }
            res.status = e.code() == ErrorCode::NeedsExtension          ? SplitStatus::NeedsExtension
                         : e.code() == ErrorCode::TruncationInsufficient ? SplitStatus::TruncationInsufficient
                                                                          : SplitStatus::NonSplitEvidence;
            res.diagnostics.push_back(std::string("seeds: ") + e.what());
        }
    } else {
        res = split(g, o.pmax, o.qmax);
    }
    return {to_json(res), exit_for(res.status), inst};
}

Outcome run_nc(const Options &o)
{
    const Instance inst = load_instance(o);
    const WeierstrassPoly f = inst.poly();
    const NcResult nc = is_nc(f, o.at_origin ? Point{} : parse_point(o.at, f.r(), f.s()));
    return {to_json(nc), nc.nc ? ok : negative, inst};
}

Outcome run_transform(const std::string &cmd, const Options &o)
{
    const Instance inst = load_instance(o);
    const WeierstrassPoly f = inst.poly();
    TransformLog log(f.r());
    WeierstrassPoly g = f;
    if (cmd == "blowup") {
        if (o.j < 1 || o.j > f.r()) {
            fail(ErrorCode::InvalidParams, "--j must name a w variable");
        }
        g = log.apply(f, {o.origin ? StepKind::blowup_origin : StepKind::blowup_wj, o.j - 1});
    } else if (cmd == "ramify") {
        g = log.apply(f, {StepKind::ramify, o.p});
    } else {
        g = log.apply(f, {StepKind::rescale, o.q});
    }
    const Instance out = instance_from_poly(g, inst.label);
    return {{{"instance", to_json(out)}, {"log", to_json(log)}}, ok, inst};
}

std::vector<Point> parse_samples(const std::string &text, int r, int s)
{
    std::vector<Point> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        out.push_back(parse_point(item, r, s));
    }
    return out;
}

Outcome run_verify(const Options &o)
{
    if (o.lemma == "sigma") {
        const LemmaReport rep = verify_sigma_identity(o.k, o.h);
        return {to_json(rep), exit_for(rep), std::nullopt};
    }
    const Instance inst = load_instance(o);
    const WeierstrassPoly f = inst.poly();
    const Point at = parse_point(o.at, f.r(), f.s());
    LemmaReport rep;
    if (o.lemma == "p1") {
        rep = verify_p1(f, at, o.pmax, o.qmax);
    } else if (o.lemma == "q0") {
        rep = verify_q0(f, at, o.pmax, o.qmax);
    } else if (o.lemma == "clopen") {
        rep = verify_clopen(f, parse_samples(o.samples.empty() ? "w=0" : o.samples, f.r(), f.s()));
    } else if (o.lemma == "negpower" || o.lemma == "homog") {
        const SplitResult res = split(at.at_origin() ? f : translate_to_point(f, at), o.pmax, o.qmax);
        if (!res.root_system) {
            rep.lemma = o.lemma;
            rep.notes.push_back("split: " + to_string(res.status));
            if (res.status == SplitStatus::NonSplitEvidence) {
                rep.hypothesis = Hypothesis::violated;
            }
        } else if (o.lemma == "negpower") {
            rep = verify_negpower(*res.root_system, f);
        } else {
            rep = verify_homog(f, *res.root_system, at);
        }
    } else {
        fail(ErrorCode::InvalidParams, "unknown lemma '" + o.lemma + "'");
    }
    return {to_json(rep), exit_for(rep), inst};
}

Instance run_generate(const Options &o)
{
    const int trunc = o.trunc < 0 ? 8 : o.trunc;
    if (!o.preset.empty()) {
        Instance inst = preset(o.preset, trunc);
        if (o.k >= 0 && o.k != inst.k) {
            fail(ErrorCode::InvalidParams, "preset " + o.preset + " has k = " + std::to_string(inst.k));
        }
        return inst;
    }
    if (!o.random) {
        fail(ErrorCode::InvalidParams, "generate needs --preset or --random");
    }
    const int k = o.k < 0 ? 2 : o.k;
    if (o.proxy == "true") {
        return random_proxy_true(k, o.s, trunc, o.seed);
    }
    if (o.proxy == "false") {
        return random_proxy_false(k, o.s, trunc, o.seed);
    }
    if (!o.proxy.empty()) {
        fail(ErrorCode::InvalidParams, "--proxy takes true or false");
    }
    return random_instance(RandomSpec{k, o.r, o.s, o.p, o.q, trunc, o.degree}, o.seed);
}

void emit(const Options &o, const json &j)
{
    const std::string text = canonical(j) + "\n";
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.out, std::ios::binary);
    if (!out) {
        fail(ErrorCode::InvalidParams, "cannot write '" + o.out + "'");
    }
    out << text;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Formal splitting of Weierstrass polynomials"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Options o;

    auto shared = [&](CLI::App *c, bool with_file) {
        if (with_file) {
            c->add_option("file", o.file, "Instance JSON");
        }
        c->add_option("--trunc", o.trunc, "Truncation N");
        c->add_option("--out", o.out, "Write the report here");
        c->add_option("--seed", o.seed, "RNG seed");
        c->add_flag("--timing", o.timing, "Add wall-clock timing to the report");
    };
    auto search = [&](CLI::App *c) {
        c->add_option("--pmax", o.pmax, "Largest ramification index");
        c->add_option("--qmax", o.qmax, "Largest pole order");
        c->add_option("--at", o.at, "Point as w=..,u=..");
    };

    auto *gen = app.add_subcommand("generate", "Write an instance");
    shared(gen, false);
    gen->add_option("--preset", o.preset, "whitney | nc3 | qpole | mu3");
    gen->add_flag("--random", o.random, "Random roots-mode instance");
    gen->add_option("--k", o.k, "Degree in z");
    gen->add_option("--r", o.r, "Number of w variables");
    gen->add_option("--s", o.s, "Number of u variables");
    gen->add_option("--p", o.p, "Ramification of the roots");
    gen->add_option("--q", o.q, "Pole order of the roots");
    gen->add_option("--degree", o.degree, "Largest x-degree of root terms");
    gen->add_option("--proxy", o.proxy, "true | false: proxy instance families");

    auto *sp = app.add_subcommand("split", "Split into linear factors");
    shared(sp, true);
    search(sp);
    sp->add_option("--seeds", o.seeds, "Linear parts to lift instead of factoring");

    auto *nc = app.add_subcommand("nc-check", "Normal crossings test at a point");
    shared(nc, true);
    nc->add_option("--at", o.at, "Point as w=..,u=..");
    nc->add_flag("--at-origin", o.at_origin, "Test at the origin");

    auto *bl = app.add_subcommand("blowup", "Blow-up chart");
    shared(bl, true);
    bl->add_option("--j", o.j, "w variable of the chart (1-based)");
    bl->add_flag("--origin", o.origin, "Centre {z = x = w = 0}");

    auto *ra = app.add_subcommand("ramify", "Pass to w = v^p");
    shared(ra, true);
    ra->add_option("--p", o.p, "Ramification index")->required();

    auto *re = app.add_subcommand("rescale", "x -> w^q x, z -> w^q z");
    shared(re, true);
    re->add_option("--q", o.q, "Pole order")->required();

    auto *ve = app.add_subcommand("verify", "Check a lemma");
    shared(ve, true);
    search(ve);
    ve->add_option("--lemma", o.lemma, "negpower | homog | p1 | q0 | sigma | clopen")->required();
    ve->add_option("--k", o.k, "k for sigma");
    ve->add_option("--h", o.h, "h for sigma");
    ve->add_option("--samples", o.samples, "Points for clopen, separated by ';'");

    auto *id = app.add_subcommand("identity", "Check the first-order sigma identity");
    shared(id, false);
    id->add_option("--k", o.k, "k")->required();
    id->add_option("--h", o.h, "h")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return input_error;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        const auto start = std::chrono::steady_clock::now();
        if (cmd == "generate") {
            emit(o, to_json(run_generate(o)));
            return ok;
        }
        Outcome res;
        if (cmd == "split") {
            res = run_split(o);
        } else if (cmd == "nc-check") {
            res = run_nc(o);
        } else if (cmd == "verify") {
            res = run_verify(o);
        } else if (cmd == "identity") {
            o.lemma = "sigma";
            res = run_verify(o);
        } else {
            res = run_transform(cmd, o);
        }
        json report = {{"command", cmd},
                       {"args", std::vector<std::string>(argv + 2, argv + argc)},
                       {"version", FSPLIT_VERSION},
                       {"result", res.result}};
        if (res.input) {
            const json inst = to_json(*res.input);
            report["instance"] = inst;
            report["input_digest"] = digest(inst);
        } else {
            report["instance"] = nullptr;
            report["input_digest"] = nullptr;
        }
        if (o.timing) {
            report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - start)
                                      .count();
        }
        emit(o, report);
        return res.code;
    } catch (const Error &e) {
        std::cerr << "fsplit: " << e.what() << "\n";
        return e.code() == ErrorCode::NeedsExtension || e.code() == ErrorCode::TruncationInsufficient ? undecided
                                                                                                       : input_error;
    }
}
