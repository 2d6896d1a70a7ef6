#include <hft/cli.hpp>
#include <hft/error.hpp>
#include <hft/io.hpp>
#include <hft/vertexcalc.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace hft::cli
{

namespace
{

struct RunConfig {
    int rank = 1;
    int twist = 0;
    int order = 3;
    std::string mode = "character";
    std::string specialization;
    std::string format = "text";
    std::string out_path;
    std::string support = "vertex";
    std::string p_file;
    std::string model_file;
    std::vector<std::string> q_poly;
};

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string render(const Json &j)
{
    return j.dump(2) + "\n";
}

std::string run_vertex(const RunConfig &c)
{
    Specialization sp = Specialization::parse(c.specialization, c.rank);
    VertexSeries s = assemble_vertex(c.rank, c.twist, c.order, parse_mode(c.mode), sp, parse_support(c.support));
    return c.format == "json" ? render(to_json(s)) : to_text(s);
}

std::string run_partition(const RunConfig &c)
{
    CountSeries p = count_series_from_json(parse_json(read_file(c.p_file), c.p_file));
    CountSeries z = hft_partition(p, c.twist, c.rank, c.order);
    return c.format == "json" ? render(to_json(z, c.rank, c.twist, c.order)) : to_text(z);
}

std::string run_compare(const RunConfig &c)
{
    Specialization sp = Specialization::parse(c.specialization, c.rank);
    CompareReport r = compare(c.rank, c.twist, c.order, sp, parse_support(c.support));
    return c.format == "json" ? render(to_json(r)) : to_text(r);
}

std::string run_stability(const RunConfig &c)
{
    FrozenTripleModel model;
    try {
        model = model_from_json(parse_json(read_file(c.model_file), c.model_file));
    } catch (const Error &e) {
        throw Error(ErrorKind::ParseError, c.model_file + ": " + e.message());
    }
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < c.q_poly.size(); ++i) {
        try {
            coeffs.push_back(parse_rational(c.q_poly[i]));
        } catch (const Error &e) {
            throw Error(ErrorKind::ParseError, "--q-poly entry " + std::to_string(i + 1) + ": " + e.message());
        }
    }
    HilbertPoly q(std::move(coeffs));
    bool listed = tau_stability_check(model, q);
    LimitVerdict v = limit_stable_equiv(model, q);

    if (c.format == "json") {
        return render(Json{{"q", to_json(q)},
                           {"subobjects_stable", listed},
                           {"stable", v.stable},
                           {"cokernel_zero_dim", v.cokernel_zero_dim},
                           {"agree", v.agree()}});
    }
    std::ostringstream out;
    out << "q(m) = " << to_string(q) << "\n";
    out << "listed subobjects: " << (listed ? "stable" : "unstable") << "\n";
    out << "image subobject: " << (v.stable ? "stable" : "unstable") << "\n";
    out << "cokernel: " << (v.cokernel_zero_dim ? "zero-dimensional" : "positive-dimensional") << "\n";
    out << "verdicts " << (v.agree() ? "agree" : "disagree") << "\n";
    return out.str();
}

// One line per fixed point of length <= order: the tuple, a tab, its total
// character in the charring text format.
std::string run_dump(const RunConfig &c)
{
    std::ostringstream out;
    for (int k = 0; k <= c.order; ++k)
        for (const auto &b : support_tuples(c.rank, k, parse_support(c.support)))
            out << to_json_string(b) << '\t' << to_string(total_character(b, c.twist)) << '\n';
    return out.str();
}

bool is_usage_kind(ErrorKind k)
{
    switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::ModeUnavailable:
    case ErrorKind::InvalidModel:
    case ErrorKind::InvalidStabilityParameter:
        return true;
    default:
        return false;
    }
}

void report(std::ostream &err, const Error &e)
{
    Json j{{"error", std::string(to_string(e.kind()))}, {"message", e.message()}};
    if (!e.context().empty()) {
        Json ctx = Json::parse(e.context(), nullptr, false);
        j["context"] = ctx.is_discarded() ? Json(e.context()) : ctx;
    }
    err << j.dump() << "\n";
}

void add_common(CLI::App *cmd, RunConfig &c, bool series)
{
    cmd->add_option("--rank", c.rank, "number of frame summands r")->check(CLI::Range(1, 64));
    cmd->add_option("--twist", c.twist, "twist n of O(-n)")->check(CLI::Range(0, 1000000));
    cmd->add_option("--order", c.order, "truncation order K")->check(CLI::Range(0, 1000000));
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", c.out_path, "write output to this file instead of stdout");
    if (series) {
        cmd->add_option("--specialize", c.specialization, "e.g. \"s3=-s1-s2,v1=1\"");
        cmd->add_option("--support", c.support, "fixed points summed per coefficient")
            ->check(CLI::IsMember({"vertex", "full"}));
    }
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Equivariant vertex and partition functions of highly frozen triples on local P^1", "hftvertex"};
    app.require_subcommand(1);
    RunConfig c;

    CLI::App *vertex = app.add_subcommand("vertex", "assemble the equivariant vertex series");
    add_common(vertex, c, true);
    vertex->add_option("--mode", c.mode, "contribution formula")->check(CLI::IsMember({"character", "paper"}));

    CLI::App *partition = app.add_subcommand("partition", "r-th power of a count series in q^n");
    add_common(partition, c, false);
    partition->add_option("--p-file", c.p_file, "JSON object {\"m\": coefficient}")->required();

    CLI::App *cmp = app.add_subcommand("compare", "character vs paper formula vs binomial closed form");
    add_common(cmp, c, true);

    CLI::App *stab = app.add_subcommand("stability", "stability of a frozen triple model");
    stab->add_option("--model-file", c.model_file, "JSON frozen triple model")->required();
    stab->add_option("--q-poly", c.q_poly, "coefficients of q(m), lowest degree first")
        ->required()
        ->delimiter(',');
    stab->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
    stab->add_option("--out", c.out_path, "write output to this file instead of stdout");

    CLI::App *dump = app.add_subcommand("dump-character", "total character of each fixed point, one per line");
    dump->add_option("--rank", c.rank, "number of frame summands r")->check(CLI::Range(1, 64));
    dump->add_option("--twist", c.twist, "twist n of O(-n)")->check(CLI::Range(0, 1000000));
    dump->add_option("--order", c.order, "largest total length")->check(CLI::Range(0, 1000000));
    dump->add_option("--support", c.support, "fixed points listed")->check(CLI::IsMember({"vertex", "full"}));
    dump->add_option("--out", c.out_path, "write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    std::string result;
    try {
        if (vertex->parsed())
            result = run_vertex(c);
        else if (partition->parsed())
            result = run_partition(c);
        else if (cmp->parsed())
            result = run_compare(c);
        else if (stab->parsed())
            result = run_stability(c);
        else
            result = run_dump(c);
    } catch (const Error &e) {
        report(err, e);
        return is_usage_kind(e.kind()) ? usage_error : computation_error;
    }

    if (c.out_path.empty()) {
        out << result;
        return out ? ok : computation_error;
    }
    std::ofstream file(c.out_path, std::ios::binary);
    if (!(file << result)) {
        err << Json{{"error", "IOError"}, {"message", "cannot write '" + c.out_path + "'"}}.dump() << "\n";
        return computation_error;
    }
    return ok;
}

} // namespace hft::cli
