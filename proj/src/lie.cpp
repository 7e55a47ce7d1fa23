#include "flagkernel/lie.hpp"

#include "flagkernel/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

namespace flagkernel {

char family_letter(Family f)
{
    return "ABCDEFG"[static_cast<int>(f)];
}

LieType::LieType(Family family, int rank) : family_(family), rank_(rank)
{
    bool ok = false;
    switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 3; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
    }
    if (!ok)
        throw InputError("invalid Lie type " + std::string(1, family_letter(family)) + std::to_string(rank));
}

std::string LieType::name() const
{
    return family_letter(family_) + std::to_string(rank_);
}

std::vector<LieType> lie_types_up_to(int max_rank)
{
    std::vector<LieType> out;
    auto add_range = [&](Family f, int lo, int hi) {
        for (int r = lo; r <= std::min(hi, max_rank); ++r)
            out.emplace_back(f, r);
    };
    add_range(Family::A, 1, max_rank);
    add_range(Family::B, 2, max_rank);
    add_range(Family::C, 3, max_rank);
    add_range(Family::D, 4, max_rank);
    add_range(Family::E, 6, 8);
    add_range(Family::F, 4, 4);
    add_range(Family::G, 2, 2);
    return out;
}

CartanMatrix::CartanMatrix(int rank, std::vector<int> entries) : rank_(rank), entries_(std::move(entries))
{
    if (rank < 1 || entries_.size() != static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank))
        throw InputError("Cartan matrix must be square with rank >= 1");
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            int a = (*this)(i, j);
            if (i == j) {
                if (a != 2)
                    throw InputError("Cartan matrix diagonal entries must be 2");
                continue;
            }
            if (a > 0 || a < -3)
                throw InputError("Cartan matrix off-diagonal entries must lie in {0,-1,-2,-3}");
            if ((a == 0) != ((*this)(j, i) == 0))
                throw InputError("Cartan matrix zero pattern must be symmetric");
        }
    }
}

CartanMatrix build_cartan_matrix(const LieType& t)
{
    const int n = t.rank();
    std::vector<int> a(static_cast<std::size_t>(n * n), 0);
    auto at = [&](int i, int j) -> int& { return a[static_cast<std::size_t>((i - 1) * n + (j - 1))]; };
    auto bond = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
    for (int i = 1; i <= n; ++i)
        at(i, i) = 2;

    switch (t.family()) {
    case Family::A:
        for (int i = 1; i < n; ++i)
            bond(i, i + 1);
        break;
    case Family::B:
        for (int i = 1; i < n; ++i)
            bond(i, i + 1);
        at(n, n - 1) = -2;
        break;
    case Family::C:
        for (int i = 1; i < n; ++i)
            bond(i, i + 1);
        at(n - 1, n) = -2;
        break;
    case Family::D:
        for (int i = 1; i < n - 1; ++i)
            bond(i, i + 1);
        bond(n - 2, n);
        break;
    case Family::E:
        bond(1, 3);
        bond(2, 4);
        for (int i = 3; i < n; ++i)
            bond(i, i + 1);
        break;
    case Family::F:
        bond(1, 2);
        bond(2, 3);
        bond(3, 4);
        at(3, 2) = -2;
        break;
    case Family::G:
        at(1, 2) = -3;
        at(2, 1) = -1;
        break;
    }
    return CartanMatrix(n, std::move(a));
}

int root_height(const Root& r)
{
    return std::accumulate(r.coeffs.begin(), r.coeffs.end(), 0);
}

bool canonical_root_less(const Root& a, const Root& b)
{
    int ha = root_height(a);
    int hb = root_height(b);
    if (ha != hb)
        return ha < hb;
    return a.coeffs > b.coeffs;
}

std::vector<Root> generate_positive_roots(const CartanMatrix& c)
{
    const int n = c.rank();
    std::set<std::vector<int>> known;
    std::vector<Root> layer;
    for (int i = 0; i < n; ++i) {
        Root r{std::vector<int>(static_cast<std::size_t>(n), 0)};
        r.coeffs[static_cast<std::size_t>(i)] = 1;
        known.insert(r.coeffs);
        layer.push_back(std::move(r));
    }

    std::vector<Root> all = layer;
    int height = 1;
    while (!layer.empty()) {
        std::set<std::vector<int>> next;
        for (const Root& alpha : layer) {
            for (int i = 0; i < n; ++i) {
                // p: how far down the alpha_i-string through alpha goes
                int p = 0;
                std::vector<int> down = alpha.coeffs;
                while (true) {
                    down[static_cast<std::size_t>(i)] -= 1;
                    if (down[static_cast<std::size_t>(i)] < 0 || !known.count(down))
                        break;
                    ++p;
                }
                // <alpha, alpha_i^vee> = sum_j k_j a_ij
                int pairing = 0;
                for (int j = 0; j < n; ++j)
                    pairing += alpha.coeffs[static_cast<std::size_t>(j)] * c(i, j);
                if (p - pairing > 0) {
                    std::vector<int> up = alpha.coeffs;
                    up[static_cast<std::size_t>(i)] += 1;
                    next.insert(std::move(up));
                }
            }
        }
        ++height;
        if (!next.empty() && height > kMaxRootHeight)
            throw InputError("root generation exceeded height " + std::to_string(kMaxRootHeight)
                             + "; Cartan matrix is not of finite type");
        layer.clear();
        for (const auto& v : next) {
            known.insert(v);
            layer.push_back(Root{v});
        }
        all.insert(all.end(), layer.begin(), layer.end());
    }
    std::sort(all.begin(), all.end(), canonical_root_less);
    return all;
}

RootSystem::RootSystem(const LieType& t)
    : type_(t), cartan_(build_cartan_matrix(t)), roots_(generate_positive_roots(cartan_))
{
}

bool RootSystem::is_positive_root(const Root& r) const
{
    return std::binary_search(roots_.begin(), roots_.end(), r, canonical_root_less);
}

std::size_t expected_positive_root_count(const LieType& t)
{
    const auto n = static_cast<std::size_t>(t.rank());
    switch (t.family()) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    }
    return 0;
}

PaintedDiagram::PaintedDiagram(std::shared_ptr<const RootSystem> roots, std::vector<int> black)
    : roots_(std::move(roots)), black_(std::move(black))
{
    if (!roots_)
        throw InputError("painted diagram needs a root system");
    std::sort(black_.begin(), black_.end());
    black_.erase(std::unique(black_.begin(), black_.end()), black_.end());
    if (black_.empty())
        throw InputError("painted diagram needs at least one black node");
    if (black_.front() < 1 || black_.back() > roots_->rank())
        throw InputError("black node out of range for " + roots_->lie_type().name());
}

PaintedDiagram::PaintedDiagram(const LieType& t, std::vector<int> black)
    : PaintedDiagram(std::make_shared<const RootSystem>(t), std::move(black))
{
}

bool PaintedDiagram::is_black(int node) const
{
    return std::binary_search(black_.begin(), black_.end(), node);
}

std::string PaintedDiagram::name() const
{
    std::string s = lie_type().name() + ":";
    for (std::size_t i = 0; i < black_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(black_[i]);
    }
    return s;
}

namespace {

int parse_int(std::string_view s, std::string_view whole)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw InputError("malformed diagram '" + std::string(whole) + "'");
    return v;
}

} // namespace

PaintedDiagram parse_diagram(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon < 2)
        throw InputError("diagram must look like B3:1, got '" + std::string(text) + "'");
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    static constexpr std::string_view letters = "ABCDEFG";
    auto idx = letters.find(letter);
    if (idx == std::string_view::npos)
        throw InputError("unknown Lie family in '" + std::string(text) + "'");
    auto family = static_cast<Family>(idx);
    int rank = parse_int(text.substr(1, colon - 1), text);

    std::vector<int> black;
    std::string_view rest = text.substr(colon + 1);
    while (true) {
        auto comma = rest.find(',');
        black.push_back(parse_int(rest.substr(0, comma), text));
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }

    if (family == Family::C && rank == 2) {
        for (int& b : black) {
            if (b < 1 || b > 2)
                throw InputError("black node out of range for C2");
            b = 3 - b;
        }
        family = Family::B;
    }
    return PaintedDiagram(LieType(family, rank), std::move(black));
}

std::vector<Root> black_positive_roots(const PaintedDiagram& d)
{
    std::vector<Root> out;
    for (const Root& r : d.root_system().positive_roots()) {
        for (int b : d.black_nodes()) {
            if (r.coeffs[static_cast<std::size_t>(b - 1)] > 0) {
                out.push_back(r);
                break;
            }
        }
    }
    return out;
}

std::vector<Root> white_positive_roots(const PaintedDiagram& d)
{
    std::vector<Root> out;
    for (const Root& r : d.root_system().positive_roots()) {
        bool white = std::none_of(d.black_nodes().begin(), d.black_nodes().end(),
                                  [&](int b) { return r.coeffs[static_cast<std::size_t>(b - 1)] > 0; });
        if (white)
            out.push_back(r);
    }
    return out;
}

std::vector<int> heights_multiset(const PaintedDiagram& d)
{
    std::vector<int> h;
    for (const Root& r : black_positive_roots(d))
        h.push_back(root_height(r));
    std::sort(h.begin(), h.end());
    return h;
}

int complex_dimension(const PaintedDiagram& d)
{
    return static_cast<int>(black_positive_roots(d).size());
}

} // namespace flagkernel
