#include <lft/cli.hpp>
#include <lft/document.hpp>
#include <lft/error.hpp>
#include <lft/oracle.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace lft
{

namespace
{

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw error(error_code::validation_error, "cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const job_spec &job, const std::string &text, std::ostream &out)
{
    if (!job.output_path) {
        out << text;
        return;
    }
    std::ofstream f(*job.output_path, std::ios::binary);
    if (!f) {
        throw error(error_code::validation_error, "cannot write '" + *job.output_path + "'");
    }
    f << text;
}

transform_kind require_kind(const job_spec &job)
{
    if (!job.kind) {
        throw error(error_code::validation_error, job.command + " needs --kind");
    }
    return *job.kind;
}

void require_precision(const job_spec &job, const connection &conn)
{
    if (job.precision < 1) {
        throw error(error_code::validation_error, job.command + " needs a positive --prec");
    }
    for (std::size_t i = 0; i < conn.pieces.size(); ++i) {
        const long floor = conn.pieces[i].pole_order() + 1;
        if (job.precision < floor) {
            throw error(error_code::validation_error, "piece " + std::to_string(i) + " needs --prec of at least "
                                                          + std::to_string(floor));
        }
    }
}

struct loaded
{
    document doc;
    std::optional<coeff> branch;
};

loaded load(const job_spec &job)
{
    std::optional<backend> ring;
    if (job.backend_spec) {
        ring = backend::parse(*job.backend_spec);
    }
    const std::string text = job.input_text ? *job.input_text : read_file(job.input_path);
    loaded l{parse_document(text, ring), std::nullopt};
    if (job.branch) {
        l.branch = l.doc.ring.parse_element(*job.branch);
    }
    return l;
}

json transform_metadata(transform_kind kind, long prec, const connection_transform &t, const backend &ring)
{
    json meta;
    meta["kind"] = std::string(kind_name(kind));
    meta["precision"] = prec;
    json pieces = json::array();
    for (const auto &d : t.details) {
        json p;
        p["branch"] = d.branch.to_string();
        p["shift"] = to_string(ratio(d.output.pole_order(), 2));
        p["galois_normalized"] = galois_normalizable(d.output, ring);
        pieces.push_back(p);
    }
    meta["pieces"] = pieces;
    return meta;
}

int do_transform(const job_spec &job, std::ostream &out)
{
    const auto kind = require_kind(job);
    const auto l = load(job);
    require_precision(job, l.doc.conn);
    const auto t = transform_connection(l.doc.conn, kind, job.precision, l.branch, l.doc.ring);
    write_output(job,
                 emit_connection(t.output, l.doc.ring, transform_metadata(kind, job.precision, t, l.doc.ring)),
                 out);
    return exit_ok;
}

int do_verify(const job_spec &job, std::ostream &out)
{
    const auto kind = require_kind(job);
    const auto l = load(job);
    require_precision(job, l.doc.conn);
    connection against;
    if (job.against_path) {
        against = parse_document(read_file(*job.against_path), l.doc.ring).conn;
    } else {
        against = transform_connection(l.doc.conn, kind, job.precision, l.branch, l.doc.ring).output;
    }
    if (against.pieces.size() != l.doc.conn.pieces.size()) {
        throw error(error_code::validation_error, "input and transform have different numbers of pieces");
    }
    json report;
    report["kind"] = std::string(kind_name(kind));
    report["precision"] = job.precision;
    bool all = true;
    json pieces = json::array();
    for (std::size_t i = 0; i < against.pieces.size(); ++i) {
        oracle_report rep;
        try {
            rep = verify_piece(kind, l.doc.conn.pieces[i], against.pieces[i], job.precision, l.branch, l.doc.ring);
        } catch (const error &e) {
            throw error(e.code(), "piece " + std::to_string(i) + ": " + e.what());
        }
        json p;
        p["passed"] = rep.passed();
        json checks = json::array();
        for (const auto &c : rep.checks) {
            json cj;
            cj["name"] = c.name;
            cj["status"] = c.skipped ? "skipped" : (c.passed ? "pass" : "fail");
            if (c.mismatch >= 0) {
                cj["mismatch"] = c.mismatch;
            }
            if (!c.detail.empty()) {
                cj["detail"] = c.detail;
            }
            checks.push_back(cj);
        }
        p["checks"] = checks;
        json b = json::array();
        for (const auto &x : rep.b) {
            b.push_back(x.to_string());
        }
        p["b"] = b;
        if (const auto *f = rep.first_failure()) {
            p["failed"] = f->name;
        }
        all = all && rep.passed();
        pieces.push_back(p);
    }
    report["passed"] = all;
    report["pieces"] = pieces;
    write_output(job, emit(report), out);
    return all ? exit_ok : exit_verification_failed;
}

int do_info(const job_spec &job, std::ostream &out)
{
    const auto l = load(job);
    json report;
    json pieces = json::array();
    long irr = 0;
    long rank = 0;
    for (const auto &p : l.doc.conn.pieces) {
        const auto inv = invariants(p);
        json j;
        j["slope"] = to_string(inv.slope);
        j["irregularity"] = inv.irregularity;
        j["rank"] = inv.rank;
        pieces.push_back(j);
        irr += inv.irregularity;
        rank += inv.rank;
    }
    report["pieces"] = pieces;
    report["irregularity"] = irr;
    report["rank"] = rank;
    write_output(job, emit(report), out);
    return exit_ok;
}

int do_canon(const job_spec &job, std::ostream &out)
{
    const auto l = load(job);
    write_output(job, emit_connection(canonicalize(l.doc.conn, l.doc.ring), l.doc.ring, l.doc.metadata), out);
    return exit_ok;
}

} // namespace

int run(const job_spec &job, std::ostream &out, std::ostream &err)
{
    try {
        if (job.command == "transform") {
            return do_transform(job, out);
        }
        if (job.command == "verify") {
            return do_verify(job, out);
        }
        if (job.command == "info") {
            return do_info(job, out);
        }
        if (job.command == "canon") {
            return do_canon(job, out);
        }
        throw error(error_code::validation_error, "unknown command '" + job.command + "'");
    } catch (const error &e) {
        json j;
        j["error"]["code"] = std::string(error_code_name(e.code()));
        j["error"]["message"] = e.what();
        err << j.dump() << "\n";
        return exit_invalid;
    }
}

} // namespace lft
