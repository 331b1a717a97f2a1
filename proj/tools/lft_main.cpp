#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include <lft/cli.hpp>
#include <lft/error.hpp>

namespace
{

void add_common(CLI::App *cmd, lft::job_spec &job)
{
    cmd->add_option("-i,--input", job.input_path, "input connection document")->required();
    cmd->add_option("-o,--output", job.output_path, "write the result here instead of stdout");
    cmd->add_option("--backend", job.backend_spec, "rational, cyclotomic:N or ext:N,m,a");
}

void add_transform_options(CLI::App *cmd, lft::job_spec &job, std::string &kind)
{
    cmd->add_option("--kind", kind, "0-inf, inf-0 or inf-inf")
        ->required()
        ->check(CLI::IsMember({"0-inf", "inf-0", "inf-inf"}));
    cmd->add_option("--prec", job.precision, "number of symbol coefficients to compute")->required();
    cmd->add_option("--branch", job.branch, "root selecting the branch, e.g. 2 or z^2*x");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Local Fourier transforms of formal connections"};
    app.require_subcommand(1);
    lft::job_spec job;
    std::string kind;

    auto *transform = app.add_subcommand("transform", "transform every piece of a connection");
    add_common(transform, job);
    add_transform_options(transform, job, kind);

    auto *verify = app.add_subcommand("verify", "re-derive a transform with the matrix oracle");
    add_common(verify, job);
    add_transform_options(verify, job, kind);
    verify->add_option("--against", job.against_path, "transform output to check (default: compute it)");

    auto *info = app.add_subcommand("info", "slope, irregularity and rank of each piece");
    add_common(info, job);

    auto *canon = app.add_subcommand("canon", "canonical form of each piece");
    add_common(canon, job);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        nlohmann::json j;
        j["error"]["code"] = "parse_error";
        j["error"]["message"] = e.what();
        std::cerr << j.dump() << "\n";
        return lft::exit_invalid;
    }

    job.command = app.get_subcommands().front()->get_name();
    if (!kind.empty()) {
        job.kind = lft::parse_kind(kind);
    }
    return lft::run(job, std::cout, std::cerr);
}
