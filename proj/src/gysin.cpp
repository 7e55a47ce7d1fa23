#include "flagkernel/gysin.hpp"

#include "flagkernel/errors.hpp"

#include <json.hpp>

namespace flagkernel {

void GradedCohomology::validate() const
{
    if (free_ranks.empty() || free_ranks.front() != 1)
        throw InputError("base cohomology must have H^0 of rank 1");
    for (int r : free_ranks)
        if (r < 0)
            throw InputError("free ranks must be nonnegative");
    if (cup_maps.size() + 1 != free_ranks.size())
        throw InputError("need one cup map per degree below the top: expected "
                         + std::to_string(free_ranks.size() - 1) + ", got " + std::to_string(cup_maps.size()));
    for (std::size_t j = 0; j < cup_maps.size(); ++j) {
        const auto rows = static_cast<std::size_t>(free_ranks[j + 1]);
        const auto cols = static_cast<std::size_t>(free_ranks[j]);
        if (cup_maps[j].rows() != rows || cup_maps[j].cols() != cols)
            throw InputError("cup map E_" + std::to_string(j) + " must be " + std::to_string(rows) + "x"
                             + std::to_string(cols));
    }
}

GradedCohomology parse_graded_cohomology(std::string_view json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed cohomology JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("free_ranks") || !j.contains("cup_maps"))
        throw InputError("cohomology JSON needs \"free_ranks\" and \"cup_maps\"");

    GradedCohomology g;
    try {
        g.free_ranks = j.at("free_ranks").get<std::vector<int>>();
        const auto& maps = j.at("cup_maps");
        if (!maps.is_array())
            throw InputError("\"cup_maps\" must be an array");
        for (std::size_t idx = 0; idx < maps.size(); ++idx) {
            const auto& rows = maps[idx];
            if (!rows.is_array())
                throw InputError("each cup map must be a list of rows");
            // shapes come from the ranks so empty matrices are representable
            std::size_t nrows = rows.size();
            std::size_t ncols = idx < g.free_ranks.size() ? static_cast<std::size_t>(std::max(g.free_ranks[idx], 0)) : 0;
            std::vector<BigInt> data;
            for (const auto& row : rows) {
                if (!row.is_array() || row.size() != ncols)
                    throw InputError("cup map E_" + std::to_string(idx) + " has a row of the wrong length");
                for (const auto& v : row) {
                    if (v.is_number_integer())
                        data.emplace_back(v.get<long long>());
                    else if (v.is_string())
                        data.push_back(parse_bigint(v.get<std::string>()));
                    else
                        throw InputError("cup map entries must be integers");
                }
            }
            g.cup_maps.emplace_back(nrows, ncols, std::move(data));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed cohomology JSON: ") + e.what());
    }
    g.validate();
    return g;
}

std::string to_string(const CohomologyGroup& g)
{
    std::string out;
    auto append = [&](const std::string& part) {
        if (!out.empty())
            out += " ⊕ ";
        out += part;
    };
    if (g.free_rank == 1)
        append("Z");
    else if (g.free_rank > 1)
        append("Z^" + std::to_string(g.free_rank));
    for (const auto& t : g.torsion)
        append("Z/" + t.str());
    return out.empty() ? "0" : out;
}

namespace {

CohomologyGroup cokernel(const IntMatrix& e)
{
    SmithForm s = smith_normal_form(e);
    CohomologyGroup g;
    g.free_rank = static_cast<int>(e.rows() - s.rank());
    for (const auto& d : s.diagonal())
        if (d > 1)
            g.torsion.push_back(d);
    return g;
}

int kernel_rank(const IntMatrix& e)
{
    return static_cast<int>(e.cols() - smith_normal_form(e).rank());
}

} // namespace

CircleBundleCohomology gysin_circle_bundle(const GradedCohomology& g)
{
    g.validate();
    const int n = g.dimension();
    CircleBundleCohomology x;
    x.groups.resize(static_cast<std::size_t>(2 * n + 2));
    x.groups[0] = CohomologyGroup{g.free_ranks[0], {}};
    for (int j = 1; j <= n; ++j)
        x.groups[static_cast<std::size_t>(2 * j)] = cokernel(g.cup_maps[static_cast<std::size_t>(j - 1)]);
    for (int j = 0; j < n; ++j)
        x.groups[static_cast<std::size_t>(2 * j + 1)] = CohomologyGroup{kernel_rank(g.cup_maps[static_cast<std::size_t>(j)]), {}};
    x.groups[static_cast<std::size_t>(2 * n + 1)] = CohomologyGroup{g.free_ranks[static_cast<std::size_t>(n)], {}};
    return x;
}

BaseModel parse_base_model(std::string_view name)
{
    if (name == "cpn")
        return BaseModel::ProjectiveSpace;
    if (name == "odd_quadric")
        return BaseModel::OddQuadric;
    throw InputError("unknown base model '" + std::string(name) + "' (expected cpn or odd_quadric)");
}

std::string model_name(BaseModel m)
{
    return m == BaseModel::ProjectiveSpace ? "cpn" : "odd_quadric";
}

GradedCohomology model_cohomology(BaseModel model, int n, int euler_multiplier)
{
    if (euler_multiplier < 1)
        throw InputError("Euler multiplier must be positive");
    if (n < 1)
        throw InputError("dimension must be at least 1");
    if (model == BaseModel::OddQuadric && (n < 3 || n % 2 == 0))
        throw InputError("odd quadric needs odd n >= 3");

    GradedCohomology g;
    g.free_ranks.assign(static_cast<std::size_t>(n) + 1, 1);
    for (int j = 0; j < n; ++j) {
        long entry = euler_multiplier;
        if (model == BaseModel::OddQuadric && j == (n - 1) / 2)
            entry *= 2;
        g.cup_maps.push_back(IntMatrix{{entry}});
    }
    return g;
}

int euler_characteristic(const CircleBundleCohomology& x)
{
    int chi = 0;
    for (std::size_t k = 0; k < x.groups.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * x.groups[k].free_rank;
    return chi;
}

bool betti_lens_check(const CircleBundleCohomology& x, int n)
{
    if (x.groups.size() != static_cast<std::size_t>(2 * n + 2))
        return false;
    for (int k = 0; k <= 2 * n + 1; ++k) {
        int expected = (k == 0 || k == 2 * n + 1) ? 1 : 0;
        if (x.degree(k).free_rank != expected)
            return false;
    }
    return true;
}

} // namespace flagkernel
