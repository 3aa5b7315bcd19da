#include "vknot/family.hpp"

#include <stdexcept>

namespace vknot {

namespace {

void require_size(int n) {
    if (n < 2) throw std::invalid_argument("family parameter must be >= 2");
}

LaurentPoly geometric(int lo, int hi) {  // t^lo + ... + t^hi
    LaurentPoly p;
    for (int k = lo; k <= hi; ++k) p += LaurentPoly::monomial(k, 1);
    return p;
}

}  // namespace

LongDiagram family_Kprime(int n) {
    require_size(n);
    std::vector<Endpoint> eps;
    eps.push_back({n + 1, Passage::Over, +1});
    for (int i = n; i >= 1; --i) eps.push_back({i, Passage::Under, +1});
    eps.push_back({n + 1, Passage::Under, +1});
    for (int i = 1; i <= n; ++i) eps.push_back({i, Passage::Over, +1});
    return LongDiagram::from_endpoints(std::move(eps));
}

LongDiagram family_K(int n) {
    require_size(n);
    std::vector<Endpoint> eps;
    eps.push_back({n + 1, Passage::Over, +1});
    for (int i = n; i >= 1; --i) eps.push_back({i, Passage::Over, -1});
    eps.push_back({n + 1, Passage::Under, +1});
    for (int i = 1; i <= n; ++i) eps.push_back({i, Passage::Under, -1});
    return LongDiagram::from_endpoints(std::move(eps));
}

PairingTables family_expected_tables(int n) {
    require_size(n);
    PairingTables t;
    const int m = n + 1;
    t.labels.resize(m);
    for (int i = 0; i < m; ++i) t.labels[i] = i + 1;
    t.A.assign(m, std::vector<int>(m, 0));
    t.B.assign(m, std::vector<int>(m, 0));
    t.C.assign(m, std::vector<int>(m, 0));
    t.v.assign(m, 1);
    t.v[m - 1] = n;
    for (int j = 1; j <= n; ++j) {
        t.A[m - 1][j - 1] = j - 1;
        t.C[m - 1][j - 1] = -n + j;
    }
    for (int i = 1; i <= n; ++i) {
        t.A[i - 1][m - 1] = -(i - 1);
        t.C[i - 1][m - 1] = n - i;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) t.B[i - 1][j - 1] = 1;
    for (int i = 1; i <= n; ++i) {
        t.B[i - 1][m - 1] = i;
        t.B[m - 1][i - 1] = (n + 1) - i;
    }
    t.B[m - 1][m - 1] = n;
    return t;
}

InvariantReport family_K_expected(int n) {
    require_size(n);
    InvariantReport r;
    r.n_chords = n + 1;
    r.genus = 2;
    r.omega = {-n + 1, 0};

    r.W[0] = LaurentPoly::monomial(n, 1) + LaurentPoly::monomial(1, -n) +
             LaurentPoly::monomial(0, n - 1);

    const LaurentPoly sym = geometric(1, n - 1) + geometric(1, n - 1).invert_var();
    r.F[0][0] = -sym + LaurentPoly::monomial(0, 2 * (n - 1));
    r.G[0][0] = LaurentPoly::monomial(n, n - 2) - geometric(1, n - 1).scaled(2) +
                LaurentPoly::monomial(1, n);
    r.H[0][0] = (LaurentPoly::monomial(n, 1) + LaurentPoly::monomial(-n, 1)).scaled(n - 1) -
                sym -
                (LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(-1, 1)).scaled(n * (n - 1)) +
                LaurentPoly::monomial(0, 2 * n * (n - 1));

    r.W_tilde = r.W[0] - r.W[1];
    r.F_tilde = r.F[0][0] - r.F[0][1] - r.F[1][0] + r.F[1][1];
    r.G_tilde = r.G[0][0] - r.G[0][1] - r.G[1][0] + r.G[1][1];
    r.H_tilde = r.H[0][0] - r.H[0][1] - r.H[1][0] + r.H[1][1];
    return r;
}

InvariantReport family_Kprime_expected(int n) {
    require_size(n);
    InvariantReport r;
    r.n_chords = n + 1;
    r.genus = 2;
    r.omega = {1, n};

    r.W[0] = LaurentPoly::t_power_minus_one(n);
    r.W[1] = LaurentPoly::t_power_minus_one(1).scaled(n);

    r.F[0][1] = geometric(1, n - 1) + LaurentPoly::monomial(0, -(n - 1));
    r.F[1][0] = r.F[0][1].invert_var();

    r.G[0][1] = LaurentPoly::monomial(n, -(n - 1)) + geometric(1, n - 1);
    r.G[1][0] = geometric(2, n) + LaurentPoly::monomial(1, -(n - 1));

    r.H[0][0] = LaurentPoly::monomial(n, -1) + LaurentPoly::monomial(0, 2) +
                LaurentPoly::monomial(-n, -1);
    r.H[0][1] = LaurentPoly::monomial(-n, -n) + geometric(1, n - 1).invert_var() +
                LaurentPoly::monomial(0, n + 1) + LaurentPoly::monomial(1, -n);
    r.H[1][0] = r.H[0][1].invert_var();
    r.H[1][1] = LaurentPoly::t_power_minus_one(1) + LaurentPoly::t_power_minus_one(-1);
    r.H[1][1] = r.H[1][1].scaled(-(static_cast<long long>(n) * n));

    r.W_tilde = r.W[0] - r.W[1];
    r.F_tilde = r.F[0][0] - r.F[0][1] - r.F[1][0] + r.F[1][1];
    r.G_tilde = r.G[0][0] - r.G[0][1] - r.G[1][0] + r.G[1][1];
    r.H_tilde = r.H[0][0] - r.H[0][1] - r.H[1][0] + r.H[1][1];
    return r;
}

}  // namespace vknot
