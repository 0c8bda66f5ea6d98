// hgx: command-line driver over .hgx extension descriptors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hgs/suite.hpp"

namespace {

struct Options {
    std::string file;
    std::uint64_t seed = 0;
    bool json = false;
    bool quiet = false;
    std::optional<std::size_t> n;
    std::string ideal;
    int bound = hgs::kDefaultFreenessBound;
    std::string property;
};

void print(const hgs::Report& r, const Options& o, bool with_values) {
    if (o.json) {
        std::cout << r.to_json().dump(2) << "\n";
        return;
    }
    if (o.quiet) return;
    for (const auto& c : r.checks) {
        std::cout << hgs::to_string(c.verdict) << "  " << c.name;
        if (c.values.contains("message")) std::cout << "  (" << c.values["message"].get<std::string>() << ")";
        std::cout << "\n";
        if (with_values && !c.values.empty() && !c.values.contains("message"))
            std::cout << "    " << c.values.dump() << "\n";
    }
    std::cout << "summary: " << r.count(hgs::Verdict::Pass) << " pass, " << r.count(hgs::Verdict::Fail)
              << " fail, " << r.count(hgs::Verdict::Unknown) << " unknown\n";
}

std::size_t require_n(const Options& o) {
    if (!o.n) throw hgs::DomainError("--n is required");
    return *o.n;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hopf-Galois structures on field extensions of Q: enumeration, descent and integral checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--seed", o.seed, "seed for sampled properties")->capture_default_str();
    app.add_flag("--json", o.json, "emit the machine-readable report");
    app.add_flag("--quiet", o.quiet, "suppress text output; rely on the exit code");

    auto file_arg = [&](CLI::App* sub) { sub->add_option("file", o.file, ".hgx descriptor")->required(); };
    auto n_opt = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--n", o.n, "structure index from `enumerate`");
        if (required) opt->required();
    };

    auto* validate = app.add_subcommand("validate", "validate a descriptor");
    file_arg(validate);
    auto* enumerate = app.add_subcommand("enumerate", "regular subgroups normalized by lambda(G), with opposites");
    file_arg(enumerate);
    auto* det = app.add_subcommand("det-identity", "det T_N = det T_N' as polynomials");
    file_arg(det);
    n_opt(det, false);
    auto* desc = app.add_subcommand("descend", "basis and action matrices of H = E[N]^G");
    file_arg(desc);
    n_opt(desc, true);
    auto* verify = app.add_subcommand("verify", "property suites");
    verify->add_option("property", o.property, "commuting | generators | hopf-galois | separable")
        ->required()
        ->check(CLI::IsMember({"commuting", "generators", "hopf-galois", "separable"}));
    file_arg(verify);
    auto* assoc = app.add_subcommand("assoc-order", "associated order of an ideal, in HNF");
    file_arg(assoc);
    n_opt(assoc, true);
    assoc->add_option("--ideal", o.ideal, "ideal name")->required();
    auto* free = app.add_subcommand("freeness", "bounded search for a free generator");
    file_arg(free);
    n_opt(free, true);
    free->add_option("--ideal", o.ideal, "ideal name")->required();
    free->add_option("--bound", o.bound, "coordinate bound of the search box")->capture_default_str();
    auto* transfer = app.add_subcommand("theorem11", "freeness transfer between H and H' for every structure");
    file_arg(transfer);
    transfer->add_option("--ideal", o.ideal, "ideal name")->required();
    transfer->add_option("--bound", o.bound, "coordinate bound of the search box")->capture_default_str();
    auto* suite = app.add_subcommand("suite", "run every check on the fixture");
    file_arg(suite);
    suite->add_option("--bound", o.bound, "coordinate bound of the search box")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }

    hgs::Report r;
    for (int i = 1; i < argc; ++i) r.command += (i > 1 ? " " : "") + std::string(argv[i]);
    r.seed = o.seed;

    std::optional<hgs::Suite> S;
    try {
        S.emplace(hgs::load_fixture(o.file), o.seed);
    } catch (const hgs::ValidationError& e) {
        std::cerr << "invalid descriptor '" << o.file << "':\n";
        for (const auto& p : e.problems()) std::cerr << "  " << p << "\n";
        return 2;
    } catch (const hgs::Error& e) {
        std::cerr << "invalid descriptor '" << o.file << "': " << e.what() << "\n";
        return 2;
    }
    r.fixture = S->fixture().descriptor.name;

    bool with_values = true;
    try {
        if (*validate) {
            const auto& F = S->fixture();
            hgs::Json v = {{"group_order", F.G().order()}, {"coset_space_size", F.X.size()}};
            if (F.ext) {
                v["degree"] = F.ext->n();
                v["irreducibility"] = F.ext->field().irreducibility().evidence;
                hgs::Json ideals = hgs::Json::array();
                for (const auto& B : F.ideals) ideals.push_back(B.name);
                v["ideals"] = ideals;
            }
            r.add("validate", hgs::Verdict::Pass, hgs::CheckKind::Invariant, v);
        } else if (*enumerate) {
            S->run_enumerate(r);
        } else if (*det) {
            S->run_det_identity(r, o.n);
        } else if (*desc) {
            S->run_descend(r, require_n(o));
        } else if (*verify) {
            if (o.property == "commuting") S->run_commuting(r);
            if (o.property == "generators") S->run_generators(r);
            if (o.property == "hopf-galois") S->run_hopf_galois(r);
            if (o.property == "separable") S->run_separable(r);
        } else if (*assoc) {
            S->run_assoc_order(r, require_n(o), o.ideal);
        } else if (*free) {
            S->run_freeness(r, require_n(o), o.ideal, o.bound);
        } else if (*transfer) {
            S->run_transfer(r, o.ideal, o.bound);
        } else if (*suite) {
            with_values = false;
            S->run_all(r, o.bound);
        }
    } catch (const hgs::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hgs::CapabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hgs::Error& e) {
        r.add("error", hgs::Verdict::Fail, hgs::CheckKind::Invariant, {{"message", e.what()}});
    }
    print(r, o, with_values);
    return r.exit_code();
}
