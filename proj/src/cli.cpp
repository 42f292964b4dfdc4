#include "vdw/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vdw/colorings.hpp"
#include "vdw/error.hpp"
#include "vdw/graph.hpp"
#include "vdw/grid.hpp"
#include "vdw/presets.hpp"
#include "vdw/render.hpp"
#include "vdw/search.hpp"
#include "vdw/serialize.hpp"
#include "vdw/verify.hpp"
#include "vdw/walk.hpp"

namespace vdw::cli {

using nlohmann::json;

json RunManifest::to_json() const
{
    return {{"command", command}, {"parameters", parameters}, {"input_digests", input_digests}, {"seed", seed}, {"version", version}};
}

std::string fnv1a_hex(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

struct SpecError : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DiffSetSpec spec_arg(const std::string& text)
{
    try {
        return parse_spec(text);
    } catch (const Error& e) {
        throw SpecError(e.what());
    }
}

std::vector<Int> int_list(const std::string& text, const char* what)
{
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": '" + text + "' is not a comma-separated integer list");
        }
    }
    if (out.empty()) throw UsageError(std::string(what) + " must not be empty");
    return out;
}

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("VDW_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("VDW_BUDGET='") + env + "' is not a nonnegative integer");
        }
    }
    return CheckOptions{}.node_budget;
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int main(const std::vector<std::string>& args);

private:
    // shared option storage
    std::string constructor_, kind_, preset_, out_path_, input_, input2_, spec_, property_, property_file_;
    std::string coeffs_, dims_, format_ = "svg", counterexample_out_, csv_out_;
    Int n_ = 0, m_ = 5, q_ = 2, k_ = 0, block_ = 0, region_ = 0, cap_ = 0, prefix_bound_ = 0, cols_ = 64, cell_ = 0;
    Color r_ = 2;
    int trials_ = 0, count_ = 20;
    std::uint64_t seed_ = 0, budget_ = 0, enumeration_cap_ = std::uint64_t{1} << 32;
    unsigned threads_ = 1;
    double max_log2_ = CheckOptions{}.max_log2_leaves;
    bool allow_small_base_ = false, no_symmetry_ = false, timing_ = false;

    CLI::App* active_ = nullptr;
    RunManifest manifest_;
    std::ostream& out_;
    std::ostream& err_;

    bool given(const char* name) const { return active_->count(name) > 0; }
    void need(const char* name, const char* why) const
    {
        if (!given(name)) throw UsageError(std::string(name) + " is required " + why);
    }

    WindowColoring load(const std::string& path)
    {
        manifest_.input_digests[path] = fnv1a_hex(slurp(path));
        return read_coloring_file(path);
    }

    void emit_text(const std::string& text)
    {
        if (out_path_.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(out_path_, std::ios::binary);
        if (!f) throw ParseError("cannot write '" + out_path_ + "'");
        f << text;
    }

    void emit_json(json body)
    {
        body["manifest"] = manifest_.to_json();
        emit_text(body.dump(2) + "\n");
    }

    void fill_manifest(const std::string& command);

    int do_color();
    int do_search();
    int do_verify();
    int do_preset();
    int do_render();
};

void Runner::fill_manifest(const std::string& command)
{
    manifest_.command = command;
    manifest_.seed = seed_;
    for (const CLI::Option* opt : active_->get_options()) {
        if (opt->count() == 0) continue;
        std::string name = opt->get_name();
        if (name == "--help") continue;
        name.erase(0, name.find_first_not_of('-'));
        if (opt->get_expected_min() == 0) manifest_.parameters[name] = true;
        else manifest_.parameters[name] = opt->results().size() == 1 ? json(opt->results()[0]) : json(opt->results());
    }
}

int Runner::do_color()
{
    const auto& c = constructor_;
    auto need_n = [&] { need("--n", ("for color " + c).c_str()); };
    std::optional<WindowColoring> result;
    if (c == "digit") {
        need_n();
        result = base_m_digit_coloring(DigitColoringParams{m_, allow_small_base_}, n_);
    } else if (c == "mod") {
        need_n();
        result = mod_coloring(n_, q_);
    } else if (c == "parity") {
        need_n();
        result = parity_coloring(n_);
    } else if (c == "constant") {
        need_n();
        result = constant_coloring(n_);
    } else if (c == "random") {
        need_n();
        result = random_coloring(n_, r_, seed_);
    } else if (c == "product") {
        need("--input", "for color product");
        need("--input2", "for color product");
        result = product_coloring(load(input_), load(input2_));
    } else if (c == "modref") {
        need("--input", "for color modref");
        result = mod_refinement(load(input_), q_);
    } else if (c == "block") {
        need("--input", "for color block");
        need("--block", "for color block");
        result = block_coloring(load(input_), block_);
    } else if (c == "tail") {
        need("--input", "for color tail");
        need("--spec", "for color tail");
        auto tr = tail_recoloring(load(input_), spec_arg(spec_), given("--region") ? std::optional<Int>(region_) : std::nullopt);
        if (tr.warning) err_ << "warning: no monochromatic S-sequence of length >= 2; only the palette doubled\n";
        result = std::move(tr.coloring);
    } else if (c == "path") {
        need("--input", "for color path");
        need("--spec", "for color path");
        auto base = load(input_);
        result = path_recoloring(OrderedGraph::distance_graph(spec_arg(spec_), base.n_max()), base).coloring;
    } else if (c == "interval") {
        need_n();
        need("--spec", "for color interval");
        const Int k = given("--k") ? k_ : 1;
        const Int bound = given("--prefix-bound") ? prefix_bound_ : std::max<Int>(64 * n_, Int{1} << 20);
        const auto prefix = spec_arg(spec_).members(bound);
        result = interval_blocking_coloring(prefix, k, n_).coloring;
    } else {
        throw UsageError("unknown constructor '" + c + "'");
    }
    json prov = result->provenance();
    prov["manifest"] = manifest_.to_json();
    std::ostringstream os;
    write_coloring(os, result->with_provenance(prov));
    emit_text(os.str());
    return kOk;
}

int Runner::do_search()
{
    json body{{"kind", kind_}};
    if (kind_ == "walk") {
        const auto w = square_walk(count_);
        std::vector<std::string> terms, gaps;
        for (const auto& z : w.terms) terms.push_back(z.get_str());
        for (const auto& g : square_gaps(w)) gaps.push_back(g.get_str());
        body["result"] = {{"terms", terms}, {"gaps", gaps}, {"check", check_walk(w)}};
        emit_json(body);
        return kOk;
    }
    need("--input", ("for search " + kind_).c_str());
    const auto c = load(input_);
    if (kind_ == "poly") {
        need("--coeffs", "for search poly");
        need("--k", "for search poly");
        const auto w = find_poly_progression(c, int_list(coeffs_, "--coeffs"), k_);
        body["result"] = w ? to_json(*w) : json(nullptr);
        emit_json(body);
        return kOk;
    }
    need("--spec", ("for search " + kind_).c_str());
    const auto s = spec_arg(spec_);
    if (kind_ == "ap") {
        if (given("--k")) {
            const auto w = find_mono_ap(c, s, k_);
            body["result"] = w ? to_json(*w) : json(nullptr);
        } else {
            const auto len = max_mono_ap_length(c, s, given("--cap") ? cap_ : c.n_max());
            body["result"] = {{"max_length", len.length}, {"witness", len.witness ? to_json(*len.witness) : json(nullptr)}};
        }
    } else if (kind_ == "sseq") {
        body["result"] = to_json(longest_mono_s_sequence(c, s));
    } else if (kind_ == "path") {
        need("--k", "for search path");
        const auto w = find_upward_mono_path(OrderedGraph::distance_graph(s, c.n_max()), c, k_);
        body["result"] = w ? to_json(*w) : json(nullptr);
    } else if (kind_ == "deadends") {
        body["result"] = find_dead_ends(c, s);
    } else if (kind_ == "grid") {
        need("--dims", "for search grid");
        const auto res = find_mono_grid(s, c, int_list(dims_, "--dims"));
        body["result"] = res.witness ? to_json(*res.witness) : json(nullptr);
        body["block_lengths"] = res.block_lengths;
        if (!res.witness) body["diagnostic"] = res.diagnostic;
    }
    emit_json(body);
    return kOk;
}

int Runner::do_verify()
{
    if (given("--property") == given("--property-file")) throw UsageError("give exactly one of --property and --property-file");
    std::string text = property_;
    if (given("--property-file")) {
        text = slurp(property_file_);
        manifest_.input_digests[property_file_] = fnv1a_hex(text);
    }
    json pj;
    try {
        pj = json::parse(text);
    } catch (const json::exception& e) {
        throw SpecError(std::string("property: ") + e.what());
    }
    const auto prop = property_from_json(pj);
    CheckOptions opts;
    opts.symmetry_breaking = !no_symmetry_;
    opts.node_budget = budget_;
    opts.max_log2_leaves = max_log2_;
    opts.threads = threads_;
    const auto v = check_window_property(prop, opts);
    json body{{"property", to_json(prop)},
              {"outcome", to_string(v.outcome)},
              {"holds", v.holds},
              {"nodes_explored", v.nodes_explored},
              {"node_budget", budget_},
              {"symmetry_breaking", opts.symmetry_breaking}};
    if (!v.note.empty()) body["note"] = v.note;
    if (timing_) body["elapsed_ms"] = std::chrono::duration<double, std::milli>(v.elapsed).count();
    if (v.counterexample) {
        std::ostringstream os;
        write_coloring(os, *v.counterexample);
        body["recheck_passed"] = v.recheck_passed;
        body["counterexample"] = coloring_to_json(*v.counterexample);
        body["counterexample_file"] = os.str();
        if (!counterexample_out_.empty()) write_coloring_file(counterexample_out_, *v.counterexample);
    }
    emit_json(body);
    switch (v.outcome) {
    case Outcome::Holds: return kOk;
    case Outcome::Fails: return kFailsWithCounterexample;
    case Outcome::Unknown: return kBudget;
    }
    return kBudget;
}

int Runner::do_preset()
{
    PresetParams p;
    if (given("--m")) p.m = m_;
    if (given("--n")) p.n = n_;
    if (given("--k")) p.k = k_;
    if (given("--r")) p.r = r_;
    if (given("--trials")) p.trials = trials_;
    if (given("--count")) p.count = count_;
    if (given("--spec")) p.spec = spec_arg(spec_);
    p.seed = seed_;
    p.threads = threads_;
    p.node_budget = budget_;
    p.enumeration_cap = enumeration_cap_;
    json body = run_preset(preset_, p);
    if (!csv_out_.empty() && body.contains("distribution_csv")) {
        std::ofstream f(csv_out_);
        if (!f) throw ParseError("cannot write '" + csv_out_ + "'");
        f << body["distribution_csv"].get<std::string>();
    }
    const bool passed = body.value("passed", false);
    emit_json(std::move(body));
    return passed ? kOk : kFailsWithCounterexample;
}

int Runner::do_render()
{
    need("--input", "for render");
    const auto c = load(input_);
    if (format_ == "svg") emit_text(render_svg(c, cols_, given("--cell") ? cell_ : 12));
    else emit_text(render_ppm(c, cols_, given("--cell") ? cell_ : 4));
    return kOk;
}

int Runner::main(const std::vector<std::string>& args)
{
    static const std::vector<std::string> commands{"color", "search", "verify", "preset", "render"};
    if (!args.empty() && args[0].front() != '-' && std::find(commands.begin(), commands.end(), args[0]) == commands.end()) {
        err_ << "error: unknown subcommand '" << args[0] << "' (expected color, search, verify, preset or render)\n";
        return kUsage;
    }

    CLI::App app{"Finite-window toolkit for ladders, accessible sets and monochromatic structures", "vdw"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    budget_ = default_budget();
    auto add_out = [&](CLI::App* s) { s->add_option("--out", out_path_, "Write the result here instead of stdout"); };
    auto add_seed = [&](CLI::App* s) { s->add_option("--seed", seed_, "Seed for randomized steps")->capture_default_str(); };

    auto* color = app.add_subcommand("color", "Build a coloring and print it in the coloring file format");
    color->add_option("constructor", constructor_, "Constructor name")
        ->required()
        ->check(CLI::IsMember({"digit", "product", "modref", "interval", "tail", "path", "block", "mod", "parity", "random", "constant"}));
    color->add_option("--n", n_, "Window size");
    color->add_option("--m", m_, "Digit base (digit)")->capture_default_str();
    color->add_option("--q", q_, "Modulus (mod, modref)")->capture_default_str();
    color->add_option("--r", r_, "Number of colors (random)")->capture_default_str();
    color->add_option("--k", k_, "Sequence bound (interval)");
    color->add_option("--block", block_, "Block length (block)");
    color->add_option("--input", input_, "Input coloring file");
    color->add_option("--input2", input2_, "Second input coloring file (product)");
    color->add_option("--spec", spec_, "Difference set as JSON");
    color->add_option("--region", region_, "Only sequences inside [1, region] count (tail)");
    color->add_option("--prefix-bound", prefix_bound_, "Largest S element handed to the interval construction");
    color->add_flag("--allow-small-base", allow_small_base_, "Permit m < 5 (digit)");
    add_seed(color);
    add_out(color);

    auto* search = app.add_subcommand("search", "Find a monochromatic structure in a coloring");
    search->add_option("kind", kind_, "Structure kind")
        ->required()
        ->check(CLI::IsMember({"ap", "sseq", "poly", "grid", "deadends", "walk", "path"}));
    search->add_option("--input", input_, "Coloring file");
    search->add_option("--spec", spec_, "Difference set as JSON");
    search->add_option("--k", k_, "Length (ap: terms, poly: steps, path: vertices)");
    search->add_option("--cap", cap_, "Upper limit for the longest AP");
    search->add_option("--coeffs", coeffs_, "Polynomial coefficients, ascending, e.g. 0,0,1");
    search->add_option("--dims", dims_, "Grid side lengths, e.g. 2,2");
    search->add_option("--count", count_, "Number of walk terms")->capture_default_str();
    add_out(search);

    auto* verify = app.add_subcommand("verify", "Decide a window property by exhaustive search");
    verify->add_option("--property", property_, "WindowProperty as JSON");
    verify->add_option("--property-file", property_file_, "File holding the WindowProperty JSON");
    verify->add_option("--threads", threads_, "Worker threads")->capture_default_str();
    verify->add_option("--budget", budget_, "Node budget (default: $VDW_BUDGET or 2e9)");
    verify->add_option("--max-log2-leaves", max_log2_, "Refuse when the leaf estimate exceeds 2^this")->capture_default_str();
    verify->add_flag("--no-symmetry", no_symmetry_, "Disable color symmetry breaking");
    verify->add_option("--counterexample-out", counterexample_out_, "Also write the counterexample coloring file here");
    verify->add_flag("--timing", timing_, "Include wall-clock time (output no longer byte-stable)");
    add_seed(verify);
    add_out(verify);

    auto* preset = app.add_subcommand("preset", "Run a named experiment preset");
    preset->add_option("name", preset_, "Preset name")->required()->check(CLI::IsMember(preset_names()));
    preset->add_option("--m", m_, "Digit base");
    preset->add_option("--n", n_, "Window size");
    preset->add_option("--k", k_, "Sequence bound");
    preset->add_option("--r", r_, "Number of colors");
    preset->add_option("--trials", trials_, "Number of trials");
    preset->add_option("--count", count_, "Term count / local-search moves");
    preset->add_option("--spec", spec_, "Difference set as JSON");
    preset->add_option("--threads", threads_, "Worker threads")->capture_default_str();
    preset->add_option("--budget", budget_, "Node budget (default: $VDW_BUDGET or 2e9)");
    preset->add_option("--enumeration-cap", enumeration_cap_, "Most colorings grid-2x2 may enumerate")->capture_default_str();
    preset->add_option("--csv", csv_out_, "Write the chain-length distribution CSV here (walk-order)");
    add_seed(preset);
    add_out(preset);

    auto* render = app.add_subcommand("render", "Draw a coloring as a strip of cells");
    render->add_option("--input", input_, "Coloring file")->required();
    render->add_option("--format", format_, "svg or ppm")->check(CLI::IsMember({"svg", "ppm"}))->capture_default_str();
    render->add_option("--cols", cols_, "Cells per row")->capture_default_str()->check(CLI::PositiveNumber);
    render->add_option("--cell", cell_, "Cell size in pixels")->check(CLI::PositiveNumber);
    add_out(render);

    std::vector<std::string> argv{"vdw"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<char*> ptrs;
    for (auto& a : argv) ptrs.push_back(a.data());
    try {
        app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    } catch (const CLI::CallForHelp&) {
        out_ << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out_ << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out_ << kVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err_ << "error: usage: " << e.what() << "\n";
        return kUsage;
    }

    try {
        active_ = app.get_subcommands().front();
        const std::string name = active_->get_name();
        std::string command = name;
        if (name == "color") command += " " + constructor_;
        else if (name == "search") command += " " + kind_;
        else if (name == "preset") command += " " + preset_;
        fill_manifest(command);
        if (name == "color") return do_color();
        if (name == "search") return do_search();
        if (name == "verify") return do_verify();
        if (name == "preset") return do_preset();
        return do_render();
    } catch (const SpecError& e) {
        err_ << "error: malformed spec JSON: " << e.what() << "\n";
    } catch (const WindowMismatch& e) {
        err_ << "error: window mismatch: " << e.what() << "\n";
    } catch (const BudgetExceeded& e) {
        err_ << "error: budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const UsageError& e) {
        err_ << "error: usage: " << e.what() << "\n";
    } catch (const ParseError& e) {
        err_ << "error: malformed input: " << e.what() << "\n";
    } catch (const InvalidSpec& e) {
        err_ << "error: invalid spec: " << e.what() << "\n";
    } catch (const HypothesisViolation& e) {
        err_ << "error: hypothesis violated: " << e.what() << "\n";
    } catch (const InsufficientPrefix& e) {
        err_ << "error: insufficient prefix: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err_ << "error: invalid argument: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err_ << "error: internal: " << e.what() << "\n";
    }
    return kUsage;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Runner r(out, err);
    return r.main(args);
}

int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace vdw::cli
