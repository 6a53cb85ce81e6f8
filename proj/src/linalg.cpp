#include "jackcc/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace jackcc {

namespace {

struct Echelon {
    PolyMatrix rows;
    std::vector<std::size_t> pivot_cols;   // pivot of row k is rows[k][pivot_cols[k]]
};

Echelon bareiss(PolyMatrix a)
{
    Echelon e;
    std::size_t m = a.size();
    std::size_t cols = m ? a[0].size() : 0;
    AlphaPoly prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < m; ++col) {
        // Lowest-degree nonzero pivot keeps the minors small.
        std::size_t best = m;
        for (std::size_t i = r; i < m; ++i)
            if (!a[i][col].is_zero() && (best == m || a[i][col].degree() < a[best][col].degree()))
                best = i;
        if (best == m)
            continue;
        std::swap(a[r], a[best]);
        const AlphaPoly & piv = a[r][col];
        for (std::size_t i = r + 1; i < m; ++i) {
            AlphaPoly lead = a[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                AlphaPoly t = piv * a[i][j];
                if (!lead.is_zero())
                    t -= lead * a[r][j];
                a[i][j] = exact_div(t, prev);
            }
            a[i][col] = AlphaPoly();
        }
        prev = piv;
        e.pivot_cols.push_back(col);
        ++r;
    }
    a.resize(r);
    e.rows = std::move(a);
    return e;
}

} // namespace

std::vector<std::vector<RatFunc>> nullspace(PolyMatrix a)
{
    std::size_t cols = a.empty() ? 0 : a[0].size();
    for (auto const & row : a)
        if (row.size() != cols)
            throw std::invalid_argument("nullspace: ragged matrix");
    Echelon e = bareiss(std::move(a));
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_cols)
        is_pivot[c] = true;

    std::vector<std::vector<RatFunc>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<RatFunc> x(cols);
        x[free] = RatFunc(1);
        for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
            std::size_t pc = e.pivot_cols[k];
            RatFunc acc;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (!e.rows[k][j].is_zero() && !x[j].is_zero())
                    acc += RatFunc(e.rows[k][j]) * x[j];
            x[pc] = -acc / RatFunc(e.rows[k][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

int rank(PolyMatrix a)
{
    return static_cast<int>(bareiss(std::move(a)).pivot_cols.size());
}

} // namespace jackcc
