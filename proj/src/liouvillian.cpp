#include "looplight/liouvillian.hpp"

#include <array>

namespace looplight {

namespace {

constexpr int vec16(int a, int b) { return 4 * (a - 1) + (b - 1); }
constexpr int kIdx44 = vec16(4, 4);
constexpr Complex kImag{0.0, 1.0};

// -i [v_jk |j><k| + v_kj |k><j|, rho] accumulated into a 16x16 generator.
void add_coupling(Mat16& L, int j, int k, Complex vjk, Complex vkj) {
    for (int b = 1; b <= 4; ++b) {
        L(vec16(j, b), vec16(k, b)) += -kImag * vjk;
        L(vec16(k, b), vec16(j, b)) += -kImag * vkj;
    }
    for (int a = 1; a <= 4; ++a) {
        L(vec16(a, k), vec16(a, j)) += kImag * vjk;
        L(vec16(a, j), vec16(a, k)) += kImag * vkj;
    }
}

}  // namespace

FullLiouvillian build_full_liouvillian(const SystemParams& p) {
    p.validate();
    FullLiouvillian out;
    out.L0.setZero();
    out.Lplus.setZero();
    out.Lminus.setZero();

    // Interaction-picture level shifts; level 1 is the reference.
    const std::array<double, 5> d = {0.0, 0.0, p.delta32 - p.delta31, -p.delta31,
                                     p.delta32 - p.delta31 - p.delta42};
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            out.L0(vec16(a, b), vec16(a, b)) += -kImag * (d[a] - d[b]);

    // Control couplings; dipole phases are absorbed by the frame, only the
    // loop combination survives and rides on the probe exponential.
    add_coupling(out.L0, 3, 1, -0.5 * p.omega31, -0.5 * p.omega31);
    add_coupling(out.L0, 3, 2, -0.5 * p.omega32, -0.5 * p.omega32);
    add_coupling(out.L0, 4, 2, -0.5 * p.omega42, -0.5 * p.omega42);

    // Probe, split by harmonic: Lplus rides on e^{-i th} and carries the
    // |4><1| side, Lminus the conjugate side. Per unit Rabi magnitude.
    for (int b = 1; b <= 4; ++b) {
        out.Lplus(vec16(4, b), vec16(1, b)) += -kImag * Complex(-0.5);
        out.Lminus(vec16(1, b), vec16(4, b)) += -kImag * Complex(-0.5);
    }
    for (int a = 1; a <= 4; ++a) {
        out.Lplus(vec16(a, 1), vec16(a, 4)) += kImag * Complex(-0.5);
        out.Lminus(vec16(a, 4), vec16(a, 1)) += kImag * Complex(-0.5);
    }

    // Spontaneous decay j -> k: population feeding plus gamma/2 damping on
    // every coherence touching the decaying level.
    const std::array<std::array<double, 3>, 4> decays = {{{3, 1, p.gamma31},
                                                          {3, 2, p.gamma32},
                                                          {4, 1, p.gamma41},
                                                          {4, 2, p.gamma42}}};
    for (const auto& jkg : decays) {
        const int j = static_cast<int>(jkg[0]);
        const int k = static_cast<int>(jkg[1]);
        const double g = jkg[2];
        out.L0(vec16(k, k), vec16(j, j)) += g;
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b) {
                double damp = 0.0;
                if (a == j) damp += 0.5 * g;
                if (b == j) damp += 0.5 * g;
                out.L0(vec16(a, b), vec16(a, b)) -= damp;
            }
    }

    // Collisional dephasing on all off-diagonal components.
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            if (a != b) out.L0(vec16(a, b), vec16(a, b)) -= p.gammaC;

    return out;
}

namespace {

// rho44 = 1 - r11 - r22 - r33 folds the 44 column into the population
// columns and a constant: dR/dt = M R - Sigma with Sigma = -L[:,44].
void eliminate(const Mat16& L, Mat15& M, Vec15& Sigma) {
    const std::array<int, 3> pops = {vec16(1, 1), vec16(2, 2), vec16(3, 3)};
    int r15 = 0;
    for (int r = 0; r < 16; ++r) {
        if (r == kIdx44) continue;
        int c15 = 0;
        for (int c = 0; c < 16; ++c) {
            if (c == kIdx44) continue;
            Complex v = L(r, c);
            for (int pc : pops)
                if (c == pc) v -= L(r, kIdx44);
            M(r15, c15) = v;
            ++c15;
        }
        Sigma(r15) = -L(r, kIdx44);
        ++r15;
    }
}

}  // namespace

DecomposedLiouvillian build_liouvillian(const SystemParams& p) {
    const FullLiouvillian full = build_full_liouvillian(p);
    DecomposedLiouvillian out;
    eliminate(full.L0, out.M0, out.Sigma0);
    eliminate(full.Lplus, out.Mplus, out.SigmaPlus);
    eliminate(full.Lminus, out.Mminus, out.SigmaMinus);
    return out;
}

Mat15 DecomposedLiouvillian::reconstructM(double omega41, double theta) const {
    const Complex ep = std::exp(kImag * theta);
    return M0 + Mminus * (omega41 * ep) + Mplus * (omega41 * std::conj(ep));
}

Vec15 DecomposedLiouvillian::reconstructSigma(double omega41, double theta) const {
    const Complex ep = std::exp(kImag * theta);
    return Sigma0 + SigmaMinus * (omega41 * ep) + SigmaPlus * (omega41 * std::conj(ep));
}

AppendixReference appendix_reference(const SystemParams& p, double omega41, double t) {
    p.validate();
    const double gr = p.gamma31;
    if (p.gamma32 != gr || p.gamma41 != gr || p.gamma42 != gr)
        throw std::invalid_argument("reference table assumes equal decay rates");
    if (p.gammaC != 0.0)
        throw std::invalid_argument("reference table assumes gammaC == 0");

    AppendixReference out;
    Mat15& M = out.M;
    Vec15& S = out.Sigma;
    M.setZero();
    S.setZero();

    const double Delta = p.multiphotonDetuning();
    const double phi = p.loopPhase();
    const Complex Ep = std::exp(kImag * (Delta * t - phi));  // e^{+i th}
    const Complex Em = std::conj(Ep);

    // 1-based accessors; the table's default is M_{j,k} = M_{k,j} except for
    // the noted entries and the explicit zero list.
    auto sym = [&M](int j, int k, Complex v) {
        M(j - 1, k - 1) = v;
        M(k - 1, j - 1) = v;
    };
    auto one = [&M](int j, int k, Complex v) { M(j - 1, k - 1) = v; };

    // Population decay block.
    one(1, 1, -gr);
    sym(1, 6, -gr);
    one(6, 6, -gr);
    one(11, 11, -2.0 * gr);
    S(0) = -gr;
    S(5) = -gr;

    // Control couplings (time independent, genuinely symmetric).
    {
        const Complex v = 0.5 * kImag * p.omega31;
        sym(1, 3, -v);  sym(1, 9, v);   sym(2, 10, v);  sym(3, 11, v);
        sym(4, 12, v);  sym(5, 7, -v);  sym(9, 11, -v); sym(13, 15, -v);
    }
    {
        const Complex v = 0.5 * kImag * p.omega32;
        sym(2, 3, -v);  sym(5, 9, v);   sym(6, 7, -v);  sym(6, 10, v);
        sym(7, 11, v);  sym(8, 12, v);  sym(10, 11, -v); sym(14, 15, -v);
    }
    {
        const Complex v = 0.5 * kImag * p.omega42;
        sym(2, 4, -v);  sym(5, 13, v);  sym(6, 8, -v);  sym(6, 14, v);
        sym(7, 15, v);  sym(10, 12, -v);
        // rho24/rho42 rows carry the trace-elimination terms; their partners
        // in rows 1 and 11 belong to the explicit zero list.
        one(8, 1, -v);   one(8, 6, -2.0 * v); one(8, 11, -v);
        one(14, 1, v);   one(14, 6, 2.0 * v); one(14, 11, v);
        S(7) = -v;
        S(13) = v;
    }

    // Probe coupling. Time-dependent entries are not symmetric: the (j,k)
    // and (k,j) partners carry opposite drive exponentials.
    {
        const Complex w = 0.5 * kImag * omega41;
        one(13, 1, 2.0 * w * Em); one(13, 6, w * Em); one(13, 11, w * Em);
        one(14, 2, w * Em);       one(15, 3, w * Em);
        S(12) = w * Em;
        one(4, 1, -2.0 * w * Ep); one(4, 6, -w * Ep); one(4, 11, -w * Ep);
        one(8, 5, -w * Ep);       one(12, 9, -w * Ep);
        S(3) = -w * Ep;
        one(1, 13, w * Ep);  one(2, 14, w * Ep);  one(3, 15, w * Ep);
        one(1, 4, -w * Em);  one(5, 8, -w * Em);  one(9, 12, -w * Em);
    }

    // Coherence diagonals (conjugate pairs across the main diagonal).
    one(3, 3, Complex(-gr, -p.delta31));
    one(9, 9, std::conj(M(2, 2)));
    one(4, 4, Complex(-gr, -(p.delta31 + p.delta42 - p.delta32)));
    one(13, 13, std::conj(M(3, 3)));
    one(7, 7, Complex(-gr, -p.delta32));
    one(10, 10, std::conj(M(6, 6)));
    one(12, 12, Complex(-2.0 * gr, -(p.delta42 - p.delta32)));
    one(15, 15, std::conj(M(11, 11)));
    one(2, 2, Complex(0.0, -(p.delta31 - p.delta32)));
    one(5, 5, std::conj(M(1, 1)));

    // The source table's corrupted duplicate line, transcribed as printed.
    // It fixes (7,8) to the rho23 diagonal value and leaves the rho24/rho42
    // diagonals blank; see appendix_fixture_exclusions().
    sym(7, 8, Complex(-gr, -p.delta32));

    return out;
}

const std::vector<std::pair<int, int>>& appendix_fixture_exclusions() {
    static const std::vector<std::pair<int, int>> entries = {
        {7, 8}, {8, 7}, {8, 8}, {14, 14}};
    return entries;
}

}  // namespace looplight
