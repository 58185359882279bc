#include "harmonic/report.hpp"

#include "harmonic/json_writer.hpp"

#include <algorithm>
#include <tuple>

namespace harmonic {

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::skipped:
        return "skipped";
    }
    return "unknown";
}

bool operator<(const GridPoint& a, const GridPoint& b)
{
    return std::tie(a.n, a.x, a.r) < std::tie(b.n, b.x, b.r);
}

bool operator==(const GridPoint& a, const GridPoint& b)
{
    return std::tie(a.n, a.x, a.r) == std::tie(b.n, b.x, b.r);
}

namespace {

struct OracleEmitter {
    JsonWriter& w;

    void operator()(const QuadratureOracle& q) const
    {
        w.begin_object();
        w.key("value").value(q.value);
        w.key("err").value(q.err);
        w.key("evals").value(q.evals);
        w.end_object();
    }

    void operator()(const MonteCarloOracle& m) const
    {
        w.begin_object();
        w.key("estimate").value(m.estimate);
        w.key("stderr").value(m.std_error);
        w.key("samples").value(m.samples);
        w.key("seed").value(m.seed);
        w.key("generator").value(m.generator);
        w.end_object();
    }
};

} // namespace

std::string to_json(const IdentityReport& report)
{
    JsonWriter w;
    w.begin_object();
    w.key("identity_id").value(report.identity_id);
    w.key("params").begin_object();
    w.key("n").value(report.params.n);
    if (report.params.x)
        w.key("x").value(report.params.x->str());
    if (report.params.r)
        w.key("r").value(*report.params.r);
    w.end_object();
    w.key("status").value(to_string(report.status));
    if (report.witness) {
        w.key("witness").begin_object();
        w.key("lhs").value(report.witness->lhs.str());
        w.key("rhs").value(report.witness->rhs.str());
        w.end_object();
    }
    if (report.reason)
        w.key("reason").value(*report.reason);
    if (report.oracle) {
        w.key("oracle");
        std::visit(OracleEmitter{w}, *report.oracle);
    }
    w.key("elapsed_ms").value(report.elapsed_ms);
    w.end_object();
    return w.str();
}

std::string csv_header()
{
    return "identity_id,n,x,r,status,lhs,rhs,elapsed_ms";
}

std::string to_csv(const IdentityReport& report)
{
    std::string row = report.identity_id;
    row += ',' + std::to_string(report.params.n);
    row += ',' + (report.params.x ? report.params.x->str() : std::string());
    row += ',' + (report.params.r ? std::to_string(*report.params.r) : std::string());
    row += ',' + std::string(to_string(report.status));
    row += ',' + (report.witness ? report.witness->lhs.str() : std::string());
    row += ',' + (report.witness ? report.witness->rhs.str() : std::string());
    row += ',' + std::to_string(report.elapsed_ms);
    return row;
}

bool any_failed(const std::vector<IdentityReport>& reports)
{
    return std::any_of(reports.begin(), reports.end(),
                       [](const IdentityReport& r) { return r.status == Status::fail; });
}

} // namespace harmonic
