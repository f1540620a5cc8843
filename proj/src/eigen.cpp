#include "forel/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "forel/errors.hpp"

namespace forel {

namespace {

double sign_like(double magnitude, double sign_of) {
    return sign_of >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude);
}

} // namespace

void balance_matrix(Matrix& a) {
    const int n = a.rows;
    const double radix = 2.0, sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    c += std::abs(a(j, i));
                    r += std::abs(a(i, j));
                }
            if (c != 0.0 && r != 0.0) {
                double g = r / radix, f = 1.0;
                const double s = c + r;
                while (c < g) {
                    f *= radix;
                    c *= sqrdx;
                }
                g = r * radix;
                while (c > g) {
                    f /= radix;
                    c /= sqrdx;
                }
                if ((c + r) / f < 0.95 * s) {
                    done = false;
                    g = 1.0 / f;
                    for (int j = 0; j < n; ++j) a(i, j) *= g;
                    for (int j = 0; j < n; ++j) a(j, i) *= f;
                }
            }
        }
    }
}

void hessenberg_reduce(Matrix& a) {
    const int n = a.rows;
    std::vector<double> v(n);
    for (int col = 0; col < n - 2; ++col) {
        double norm = 0.0;
        for (int i = col + 1; i < n; ++i) norm += a(i, col) * a(i, col);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        const double alpha = -sign_like(norm, a(col + 1, col));
        double vnorm = 0.0;
        for (int i = col + 1; i < n; ++i) {
            v[i] = a(i, col);
            if (i == col + 1) v[i] -= alpha;
            vnorm += v[i] * v[i];
        }
        vnorm = std::sqrt(vnorm);
        if (vnorm == 0.0) continue;
        for (int i = col + 1; i < n; ++i) v[i] /= vnorm;
        // A <- (I - 2 v v^T) A
        for (int j = 0; j < n; ++j) {
            double dot = 0.0;
            for (int i = col + 1; i < n; ++i) dot += v[i] * a(i, j);
            for (int i = col + 1; i < n; ++i) a(i, j) -= 2.0 * v[i] * dot;
        }
        // A <- A (I - 2 v v^T)
        for (int i = 0; i < n; ++i) {
            double dot = 0.0;
            for (int j = col + 1; j < n; ++j) dot += a(i, j) * v[j];
            for (int j = col + 1; j < n; ++j) a(i, j) -= 2.0 * dot * v[j];
        }
        for (int i = col + 2; i < n; ++i) a(i, col) = 0.0;
    }
}

std::vector<std::complex<double>> eigenvalues(const Matrix& m) {
    if (m.rows != m.cols) throw EigenFailureError("matrix must be square");
    const int n = m.rows;
    if (n == 0) return {};
    if (n > 64) throw EigenFailureError("spectrum supported up to 64x64");

    Matrix a = m;
    balance_matrix(a);
    hessenberg_reduce(a);

    const double eps = std::numeric_limits<double>::epsilon();
    std::vector<std::complex<double>> wri(n);

    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));
    if (anorm == 0.0) return wri; // zero matrix

    int nn = n - 1;
    double t = 0.0;
    while (nn >= 0) {
        int its = 0;
        while (true) {
            // Look for a negligible subdiagonal element to split at.
            int l;
            for (l = nn; l >= 1; --l) {
                double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(a(l, l - 1)) <= eps * s) {
                    a(l, l - 1) = 0.0;
                    break;
                }
            }
            double x = a(nn, nn);
            if (l == nn) { // one real root
                wri[nn--] = x + t;
                break;
            }
            double y = a(nn - 1, nn - 1);
            double w = a(nn, nn - 1) * a(nn - 1, nn);
            if (l == nn - 1) { // a 2x2 block deflates
                double p = 0.5 * (y - x);
                const double q = p * p + w;
                double z = std::sqrt(std::abs(q));
                x += t;
                if (q >= 0.0) {
                    z = p + sign_like(z, p);
                    wri[nn - 1] = wri[nn] = x + z;
                    if (z != 0.0) wri[nn] = x - w / z;
                } else {
                    wri[nn] = std::complex<double>(x + p, -z);
                    wri[nn - 1] = std::conj(wri[nn]);
                }
                nn -= 2;
                break;
            }
            if (its == 30) throw EigenFailureError("QR iteration did not converge");
            if (its == 10 || its == 20) { // exceptional shift
                t += x;
                for (int i = 0; i <= nn; ++i) a(i, i) -= x;
                const double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
                y = x = 0.75 * s;
                w = -0.4375 * s * s;
            }
            ++its;
            // Form the implicit double shift and find where to start the sweep.
            int mm;
            double p = 0.0, q = 0.0, r = 0.0;
            for (mm = nn - 2; mm >= l; --mm) {
                const double z = a(mm, mm);
                const double rr = x - z;
                const double ss = y - z;
                p = (rr * ss - w) / a(mm + 1, mm) + a(mm, mm + 1);
                q = a(mm + 1, mm + 1) - z - rr - ss;
                r = a(mm + 2, mm + 1);
                const double scale = std::abs(p) + std::abs(q) + std::abs(r);
                p /= scale;
                q /= scale;
                r /= scale;
                if (mm == l) break;
                const double u = std::abs(a(mm, mm - 1)) * (std::abs(q) + std::abs(r));
                const double v = std::abs(p) * (std::abs(a(mm - 1, mm - 1)) + std::abs(z) +
                                                std::abs(a(mm + 1, mm + 1)));
                if (u <= eps * v) break;
            }
            for (int i = mm; i < nn - 1; ++i) {
                a(i + 2, i) = 0.0;
                if (i != mm) a(i + 2, i - 1) = 0.0;
            }
            // Double QR sweep: chase the bulge from row mm down to nn.
            for (int k = mm; k < nn; ++k) {
                if (k != mm) {
                    p = a(k, k - 1);
                    q = a(k + 1, k - 1);
                    r = 0.0;
                    if (k + 1 != nn) r = a(k + 2, k - 1);
                    x = std::abs(p) + std::abs(q) + std::abs(r);
                    if (x != 0.0) {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                const double s = sign_like(std::sqrt(p * p + q * q + r * r), p);
                if (s == 0.0) continue;
                if (k == mm) {
                    if (l != mm) a(k, k - 1) = -a(k, k - 1);
                } else {
                    a(k, k - 1) = -s * x;
                }
                p += s;
                x = p / s;
                y = q / s;
                const double z = r / s;
                q /= p;
                r /= p;
                for (int j = k; j <= nn; ++j) { // row transform
                    double pp = a(k, j) + q * a(k + 1, j);
                    if (k + 1 != nn) {
                        pp += r * a(k + 2, j);
                        a(k + 2, j) -= pp * z;
                    }
                    a(k + 1, j) -= pp * y;
                    a(k, j) -= pp * x;
                }
                const int mmin = std::min(nn, k + 3);
                for (int i = l; i <= mmin; ++i) { // column transform
                    double pp = x * a(i, k) + y * a(i, k + 1);
                    if (k + 1 != nn) {
                        pp += z * a(i, k + 2);
                        a(i, k + 2) -= pp * r;
                    }
                    a(i, k + 1) -= pp * q;
                    a(i, k) -= pp;
                }
            }
        }
    }

    // Deterministic presentation: sort by real part, then imaginary part.
    std::sort(wri.begin(), wri.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
        return lhs.imag() < rhs.imag();
    });
    return wri;
}

} // namespace forel
