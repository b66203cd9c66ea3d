#include "carter/classifier.hpp"

#include <sstream>

#include "carter/abacus.hpp"
#include "carter/adic.hpp"
#include "carter/carter.hpp"
#include "carter/errors.hpp"

namespace carter {

std::int64_t steinberg_index(const Partition& lambda, std::int64_t l)
{
    require_modulus(l);
    std::int64_t m = 0;
    while (lambda[m + 1] - lambda[m + 2] == l - 1)
        ++m;
    return m;
}

Partition steinberg_partition(std::int64_t n, std::int64_t l)
{
    require_modulus(l);
    if (n < 0)
        throw Error(ErrorKind::DomainError, "Steinberg partition needs n >= 0");
    std::vector<std::int64_t> parts;
    for (std::int64_t k = n; k >= 1; --k)
        parts.push_back((l - 1) * k);
    return Partition(parts);
}

std::string render(const TraceStep& step)
{
    return step.tag + ": " + step.detail;
}

std::vector<std::string> render(const std::vector<TraceStep>& trace)
{
    std::vector<std::string> out;
    out.reserve(trace.size());
    for (const auto& s : trace)
        out.push_back(render(s));
    return out;
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Accumulates checks; every check is recorded even after a failure so the
// trace shows the whole picture.
class Checker {
public:
    explicit Checker(std::vector<TraceStep>& trace) : trace_(trace) {}

    void note(std::string tag, std::string detail) { trace_.push_back({std::move(tag), std::move(detail)}); }

    void core(const std::string& label, const Partition& part, std::int64_t modulus)
    {
        const bool ok = is_l_core(part, modulus);
        ok_ = ok_ && ok;
        note("core", label + " " + to_string(part) + " is a " + std::to_string(modulus) + "-core: " + yes_no(ok));
    }

    std::int64_t stind(const std::string& label, const Partition& part, std::int64_t modulus)
    {
        const auto s = steinberg_index(part, modulus);
        note("stind", "stind_" + std::to_string(modulus) + " of " + label + " " + to_string(part) + " = "
                          + std::to_string(s));
        return s;
    }

    void length(const std::string& label, const Partition& part, const std::string& bound_label,
                std::int64_t stind)
    {
        const bool ok = part.length() <= stind + 1;
        ok_ = ok_ && ok;
        note("length", "len " + label + " " + to_string(part) + " = " + std::to_string(part.length())
                           + " <= " + bound_label + " + 1 = " + std::to_string(stind + 1) + ": "
                           + (ok ? "ok" : "fails"));
    }

    bool ok() const { return ok_; }

private:
    std::vector<TraceStep>& trace_;
    bool ok_ = true;
};

std::string describe_split(const Partition& lambda, const AdicDecomposition& d)
{
    return to_string(lambda) + " = " + to_string(d.restricted) + " + " + std::to_string(d.modulus)
           + to_string(d.quotient);
}

std::string describe_expansion(const Partition& lambda, const PAdicExpansion& e)
{
    std::ostringstream os;
    os << to_string(lambda) << " =";
    if (e.layers.empty())
        os << " 0";
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < e.layers.size(); ++i) {
        os << (i ? " + " : " ");
        if (i)
            os << scale;
        os << to_string(e.layers[i]);
        scale *= e.prime;
    }
    return os.str();
}

std::string layer_label(const std::string& base, std::size_t i)
{
    return base + "[" + std::to_string(i) + "]";
}

// Layers of a base-p expansion: all p-cores, and len(layer j) <= stind_p(layer i) + 1 for i < j.
void check_layers(Checker& check, const PAdicExpansion& e, const std::string& base)
{
    const auto p = e.prime;
    std::vector<std::int64_t> stinds;
    for (std::size_t i = 0; i < e.layers.size(); ++i) {
        check.core(layer_label(base, i), e.layers[i], p);
        stinds.push_back(check.stind(layer_label(base, i), e.layers[i], p));
    }
    for (std::size_t j = 1; j < e.layers.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            check.length(layer_label(base, j), e.layers[j],
                         "stind_" + std::to_string(p) + " " + layer_label(base, i), stinds[i]);
}

}  // namespace

InjectivityResult is_injective(const Partition& lambda, const ModularParams& params)
{
    InjectivityResult result{false, {}};
    Checker check(result.trace);
    const auto l = params.l();
    const auto p = params.p();
    check.note("regime", std::string(to_string(params.regime())) + " " + to_string(params));

    switch (params.regime()) {
    case Regime::CharacteristicZero: {
        const auto d = l_adic_split(lambda, l);
        check.note("split", describe_split(lambda, d));
        check.core("restricted", d.restricted, l);
        const auto s = check.stind("restricted", d.restricted, l);
        check.length("quotient", d.quotient, "stind_" + std::to_string(l) + " restricted", s);
        break;
    }
    case Regime::Classical: {
        const auto e = p_adic_expansion(lambda, p);
        check.note("expand", describe_expansion(lambda, e));
        check_layers(check, e, "layer");
        break;
    }
    case Regime::Mixed: {
        const auto d = l_adic_split(lambda, l);
        check.note("split", describe_split(lambda, d));
        check.core("restricted", d.restricted, l);
        const auto s = check.stind("restricted", d.restricted, l);
        const auto e = p_adic_expansion(d.quotient, p);
        check.note("expand", describe_expansion(d.quotient, e));
        for (std::size_t j = 0; j < e.layers.size(); ++j)
            check.length(layer_label("quotient", j), e.layers[j], "stind_" + std::to_string(l) + " restricted", s);
        check_layers(check, e, "quotient");
        break;
    }
    }
    result.injective = check.ok();
    check.note("verdict", result.injective ? "injective" : "not injective");
    return result;
}

const char* to_string(YoungStatus status)
{
    switch (status) {
    case YoungStatus::Yes: return "yes";
    case YoungStatus::No: return "no";
    case YoungStatus::Unknown: return "unknown";
    }
    return "unknown";
}

YoungStatus young_status_from_string(const std::string& s)
{
    if (s == "yes")
        return YoungStatus::Yes;
    if (s == "no")
        return YoungStatus::No;
    if (s == "unknown")
        return YoungStatus::Unknown;
    throw Error(ErrorKind::DomainError, "bad young status '" + s + "'");
}

namespace {

YoungStatus young_from(bool injective, const ModularParams& params)
{
    if (injective)
        return YoungStatus::Yes;
    // Non-injective Specht modules can still be Young modules at l = 2.
    return params.l() >= 3 ? YoungStatus::No : YoungStatus::Unknown;
}

}  // namespace

YoungStatus young_status(const Partition& lambda, const ModularParams& params)
{
    return young_from(is_injective(lambda, params).injective, params);
}

WeylPredicates weyl_predicates(const Partition& lambda, const ModularParams& params)
{
    const bool inj = is_injective(lambda, params).injective;
    return {inj, inj};
}

bool weyl_irreducible(const Partition& mu, const ModularParams& params)
{
    return is_injective(transpose(mu), params).injective;
}

ClassificationReport classify(const Partition& lambda, const ModularParams& params)
{
    auto inj = is_injective(lambda, params);
    const bool regular = is_l_regular(lambda, params.l());
    const auto carter = is_carter(lambda, params);

    auto& trace = inj.trace;
    trace.push_back({"carter", std::string("l-regular: ") + yes_no(regular) + ", column valuations constant: "
                                   + yes_no(carter.carter)
                                   + (carter.profile.first_violation
                                          ? " (first violation in column "
                                                + std::to_string(*carter.profile.first_violation) + ")"
                                          : "")});
    if (inj.injective != (regular && carter.carter))
        throw Error(ErrorKind::CriterionDisagreement,
                    "engines disagree on " + to_string(lambda) + " at " + to_string(params));

    return ClassificationReport{lambda,
                                params,
                                inj.injective,
                                inj.injective,
                                inj.injective,
                                young_from(inj.injective, params),
                                regular,
                                carter.carter,
                                std::move(inj.trace)};
}

std::vector<Partition> enumerate_injective(std::int64_t r, const ModularParams& params)
{
    std::vector<Partition> out;
    PartitionStream stream(r);
    while (auto lambda = stream.next())
        if (is_injective(*lambda, params).injective)
            out.push_back(std::move(*lambda));
    return out;
}

}  // namespace carter
