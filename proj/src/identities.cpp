#include "ferrers/identities.hpp"

#include <algorithm>

namespace ferrers {

namespace {

LaurentSeries inv_poch(const Monomial& a, int step, int n, int order)
{
    return geom_inverse(poch(a, step, n, order), order);
}

LaurentSeries inv_poch_inf(const Monomial& a, int step, int order)
{
    return geom_inverse(poch_inf(a, step, order), order);
}

long long sq(long long n) { return n * n; }

Monomial sign_pow(int n)  // (-1)^n
{
    return mono(n % 2 == 0 ? 1 : -1, 0, 0, 0);
}

// ---- closed-form series builders, one lambda per displayed formula ----

LaurentSeries nu_def(int N)  // sum (yz)^n q^(n^2+n) / (yq;q^2)_{n+1}
{
    return sum_series(
        [N](int n) {
            return inv_poch(mono(1, 1, 0, 1), 2, n + 1, N) *
                   mono(1, n, n, static_cast<int>(sq(n) + n));
        },
        [](int n) { return sq(n) + n; }, N);
}

LaurentSeries omega_def(int N)
{
    return sum_series(
        [N](int n) {
            return inv_poch(mono(1, 1, 0, 1), 2, n + 1, N) *
                   inv_poch(mono(1, 0, 1, 1), 2, n + 1, N) *
                   mono(1, n, n, static_cast<int>(2 * (sq(n) + n)));
        },
        [](int n) { return 2 * (sq(n) + n); }, N);
}

LaurentSeries newnu_rhs_from(int start, int N)  // sum_{n>=start} (-zq;q^2)_n (yq)^n
{
    return sum_series(
        [start, N](int n) {
            if (n < start) return LaurentSeries::zero(N);
            return poch(mono(-1, 0, 1, 1), 2, n, N) * mono(1, n, 0, n);
        },
        [](int n) { return n; }, N);
}

LaurentSeries omega_z_def(int N)  // sum z^n q^(2n^2+2n) / ((q;q^2)_{n+1}(zq;q^2)_{n+1})
{
    return sum_series(
        [N](int n) {
            return inv_poch(mono(1, 0, 0, 1), 2, n + 1, N) *
                   inv_poch(mono(1, 0, 1, 1), 2, n + 1, N) *
                   mono(1, 0, n, static_cast<int>(2 * (sq(n) + n)));
        },
        [](int n) { return 2 * (sq(n) + n); }, N);
}

LaurentSeries nu_z_def(int N)  // sum q^(n^2+n) / (-zq;q^2)_{n+1}
{
    return sum_series(
        [N](int n) {
            return inv_poch(mono(-1, 0, 1, 1), 2, n + 1, N) *
                   mono(1, 0, 0, static_cast<int>(sq(n) + n));
        },
        [](int n) { return sq(n) + n; }, N);
}

LaurentSeries nu1_def(int N)  // sum z^n q^(n^2+n) / (-q;q^2)_{n+1}
{
    return sum_series(
        [N](int n) {
            return inv_poch(mono(-1, 0, 0, 1), 2, n + 1, N) *
                   mono(1, 0, n, static_cast<int>(sq(n) + n));
        },
        [](int n) { return sq(n) + n; }, N);
}

}  // namespace

Int coefficient_of(const LaurentSeries& f, int qdeg, int y, int z)
{
    return f.coefficient(qdeg, y, z);
}

LaurentSeries nu_trivariate(int order) { return nu_def(order); }
LaurentSeries omega_trivariate(int order) { return omega_def(order); }

VerificationReport verify(const IdentityEntry& entry, int order)
{
    VerificationReport report;
    report.name = entry.name;
    report.order = order;
    const LaurentSeries lhs = entry.lhs(order).truncated(order);
    const LaurentSeries rhs = entry.rhs(order).truncated(order);
    const int lo = std::min(lhs.min_degree(), rhs.min_degree());
    for (int d = lo; d <= order; ++d) {
        YZPoly diff = lhs.at(d);
        diff -= rhs.at(d);
        if (diff.is_zero()) continue;
        const auto& [key, unused] = *diff.terms().begin();
        (void)unused;
        report.pass = false;
        report.first_discrepancy =
            Discrepancy{d, key.first, key.second,
                        lhs.coefficient(d, key.first, key.second),
                        rhs.coefficient(d, key.first, key.second)};
        return report;
    }
    report.pass = true;
    return report;
}

const std::vector<IdentityEntry>& registry()
{
    static const std::vector<IdentityEntry> entries = [] {
        std::vector<IdentityEntry> r;
        auto add = [&r](std::string name, std::string anchor, std::string vars,
                        std::function<LaurentSeries(int)> lhs,
                        std::function<LaurentSeries(int)> rhs) {
            r.push_back({std::move(name), std::move(anchor), std::move(vars),
                         std::move(lhs), std::move(rhs)});
        };

        add("andrews2_1",
            "sum z^n q^(2n^2+2n)/((q;q^2)_{n+1}(zq;q^2)_{n+1}) = "
            "sum z^n q^n/(q;q^2)_{n+1}",
            "z", omega_z_def, [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, 0, 1), 2, n + 1, N) *
                               mono(1, 0, n, n);
                    },
                    [](int n) { return n; }, N);
            });

        add("andrews2_2",
            "sum q^(n^2+n)/(-zq;q^2)_{n+1} = sum (q/z;q^2)_n (-zq)^n", "z",
            nu_z_def, [](int N) {
                return sum_series(
                    [N](int n) {
                        return poch(mono(1, 0, -1, 1), 2, n, N) *
                               (sign_pow(n) * mono(1, 0, n, n));
                    },
                    [](int n) { return n; }, N);
            });

        add("eqv1", "sum z^n q^(n^2+n)/(-q;q^2)_{n+1} = sum (zq;q^2)_n (-q)^n",
            "z", nu1_def, [](int N) {
                return sum_series(
                    [N](int n) {
                        return poch(mono(1, 0, 1, 1), 2, n, N) *
                               (sign_pow(n) * mono(1, 0, 0, n));
                    },
                    [](int n) { return n; }, N);
            });

        add("omega_base",
            "sum_{n>=1} q^n/((q^n;q)_{n+1}(q^(2n+2);q^2)_inf) = "
            "sum q^(2n^2+2n+1)/(q;q^2)_{n+1}^2",
            "", [](int N) {
                return sum_series(
                    [N](int n) {
                        if (n == 0) return LaurentSeries::zero(N);
                        return inv_poch(mono(1, 0, 0, n), 1, n + 1, N) *
                               inv_poch_inf(mono(1, 0, 0, 2 * n + 2), 2, N) *
                               mono(1, 0, 0, n);
                    },
                    [](int n) { return n; }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        const LaurentSeries inv =
                            inv_poch(mono(1, 0, 0, 1), 2, n + 1, N);
                        return inv * inv *
                               mono(1, 0, 0, static_cast<int>(2 * (sq(n) + n) + 1));
                    },
                    [](int n) { return 2 * (sq(n) + n) + 1; }, N);
            });

        add("nu_base",
            "sum q^n (-q^(n+1);q)_n (-q^(2n+2);q^2)_inf = "
            "sum q^(n^2+n)/(q;q^2)_{n+1}",
            "", [](int N) {
                return sum_series(
                    [N](int n) {
                        return poch(mono(-1, 0, 0, n + 1), 1, n, N) *
                               poch_inf(mono(-1, 0, 0, 2 * n + 2), 2, N) *
                               mono(1, 0, 0, n);
                    },
                    [](int n) { return n; }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, 0, 1), 2, n + 1, N) *
                               mono(1, 0, 0, static_cast<int>(sq(n) + n));
                    },
                    [](int n) { return sq(n) + n; }, N);
            });

        add("thm1_omega",
            "sum_{n>=1} q^n/((zq^n;q)_{n+1}(zq^(2n+2);q^2)_inf) = "
            "sum z^n q^(2n^2+2n+1)/((q;q^2)_{n+1}(zq;q^2)_{n+1})",
            "z", [](int N) {
                return sum_series(
                    [N](int n) {
                        if (n == 0) return LaurentSeries::zero(N);
                        return inv_poch(mono(1, 0, 1, n), 1, n + 1, N) *
                               inv_poch_inf(mono(1, 0, 1, 2 * n + 2), 2, N) *
                               mono(1, 0, 0, n);
                    },
                    [](int n) { return n; }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, 0, 1), 2, n + 1, N) *
                               inv_poch(mono(1, 0, 1, 1), 2, n + 1, N) *
                               mono(1, 0, n, static_cast<int>(2 * (sq(n) + n) + 1));
                    },
                    [](int n) { return 2 * (sq(n) + n) + 1; }, N);
            });

        add("thm1_nu",
            "sum q^n (-zq^(n+1);q)_n (-zq^(2n+2);q^2)_inf = "
            "sum z^n q^(n^2+n)/(q;q^2)_{n+1}",
            "z", [](int N) {
                return sum_series(
                    [N](int n) {
                        return poch(mono(-1, 0, 1, n + 1), 1, n, N) *
                               poch_inf(mono(-1, 0, 1, 2 * n + 2), 2, N) *
                               mono(1, 0, 0, n);
                    },
                    [](int n) { return n; }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, 0, 1), 2, n + 1, N) *
                               mono(1, 0, n, static_cast<int>(sq(n) + n));
                    },
                    [](int n) { return sq(n) + n; }, N);
            });

        add("thm1_omega_shifted",
            "sum q^n/((zq^(n+1);q)_{n+2}(zq^(2n+4);q^2)_inf) = "
            "sum z^n q^(2n^2+2n)/((q;q^2)_{n+1}(zq;q^2)_{n+1})",
            "z", [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, 1, n + 1), 1, n + 2, N) *
                               inv_poch_inf(mono(1, 0, 1, 2 * n + 4), 2, N) *
                               mono(1, 0, 0, n);
                    },
                    [](int n) { return n; }, N);
            },
            omega_z_def);

        add("thm3_newnu",
            "sum (yz)^n q^(n^2+n)/(yq;q^2)_{n+1} = sum (-zq;q^2)_n (yq)^n",
            "yz", nu_def, [](int N) { return newnu_rhs_from(0, N); });

        add("thm4_newomega_y",
            "sum (yz)^n q^(2n^2+2n)/((yq;q^2)_{n+1}(zq;q^2)_{n+1}) = "
            "sum y^n q^n/(zq;q^2)_{n+1}",
            "yz", omega_def, [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, 1, 1), 2, n + 1, N) *
                               mono(1, n, 0, n);
                    },
                    [](int n) { return n; }, N);
            });

        add("thm4_newomega_z",
            "sum (yz)^n q^(2n^2+2n)/((yq;q^2)_{n+1}(zq;q^2)_{n+1}) = "
            "sum z^n q^n/(yq;q^2)_{n+1}",
            "yz", omega_def, [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 1, 0, 1), 2, n + 1, N) *
                               mono(1, 0, n, n);
                    },
                    [](int n) { return n; }, N);
            });

        add("cor21_rightofnu",
            "sum z^n q^(n^2+n)/(q;q^2)_{n+1} = sum (-zq;q^2)_n q^n", "z",
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, 0, 1), 2, n + 1, N) *
                               mono(1, 0, n, static_cast<int>(sq(n) + n));
                    },
                    [](int n) { return sq(n) + n; }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return poch(mono(-1, 0, 1, 1), 2, n, N) *
                               mono(1, 0, 0, n);
                    },
                    [](int n) { return n; }, N);
            });

        add("cor21_dpcolumn",
            "sum z^n q^(n^2+n)/(zq;q^2)_{n+1} = sum (-q;q^2)_n (zq)^n", "z",
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, 1, 1), 2, n + 1, N) *
                               mono(1, 0, n, static_cast<int>(sq(n) + n));
                    },
                    [](int n) { return sq(n) + n; }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return poch(mono(-1, 0, 0, 1), 2, n, N) *
                               mono(1, 0, n, n);
                    },
                    [](int n) { return n; }, N);
            });

        add("cor21_dpcolumn_row",
            "sum q^(n^2+n)/(zq;q^2)_{n+1} = sum (-q/z;q^2)_n (zq)^n", "z",
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, 1, 1), 2, n + 1, N) *
                               mono(1, 0, 0, static_cast<int>(sq(n) + n));
                    },
                    [](int n) { return sq(n) + n; }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return poch(mono(-1, 0, -1, 1), 2, n, N) *
                               mono(1, 0, n, n);
                    },
                    [](int n) { return n; }, N);
            });

        add("cor21_dpcolumn_plus_row",
            "sum z^(2n) q^(n^2+n)/(zq;q^2)_{n+1} = sum (-zq;q^2)_n (zq)^n",
            "z", [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, 1, 1), 2, n + 1, N) *
                               mono(1, 0, 2 * n, static_cast<int>(sq(n) + n));
                    },
                    [](int n) { return sq(n) + n; }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return poch(mono(-1, 0, 1, 1), 2, n, N) *
                               mono(1, 0, n, n);
                    },
                    [](int n) { return n; }, N);
            });

        add("comtodpcol_minus",
            "sum z^n q^(n^2+n)/(-zq;q^2)_{n+1} = sum (q;q^2)_n (-zq)^n", "z",
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(-1, 0, 1, 1), 2, n + 1, N) *
                               mono(1, 0, n, static_cast<int>(sq(n) + n));
                    },
                    [](int n) { return sq(n) + n; }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return poch(mono(1, 0, 0, 1), 2, n, N) *
                               (sign_pow(n) * mono(1, 0, n, n));
                    },
                    [](int n) { return n; }, N);
            });

        add("comtodpcol_plus_row_minus",
            "sum z^(2n) q^(n^2+n)/(-zq;q^2)_{n+1} = sum (zq;q^2)_n (-zq)^n",
            "z", [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(-1, 0, 1, 1), 2, n + 1, N) *
                               mono(1, 0, 2 * n, static_cast<int>(sq(n) + n));
                    },
                    [](int n) { return sq(n) + n; }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return poch(mono(1, 0, 1, 1), 2, n, N) *
                               (sign_pow(n) * mono(1, 0, n, n));
                    },
                    [](int n) { return n; }, N);
            });

        add("cor22_opcolumn_rows",
            "sum z^n q^(2n^2+2n)/((q;q^2)_{n+1}(zq;q^2)_{n+1}) = "
            "sum q^n/(zq;q^2)_{n+1}",
            "z", omega_z_def, [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, 1, 1), 2, n + 1, N) *
                               mono(1, 0, 0, n);
                    },
                    [](int n) { return n; }, N);
            });

        add("cor22_opcolumn_cols",
            "sum z^n q^(2n^2+2n)/((q;q^2)_{n+1}(zq;q^2)_{n+1}) = "
            "sum z^n q^n/(q;q^2)_{n+1}",
            "z", omega_z_def, [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, 0, 1), 2, n + 1, N) *
                               mono(1, 0, n, n);
                    },
                    [](int n) { return n; }, N);
            });

        add("cor22_oprow_minus_col",
            "sum q^(2n^2+2n)/((q/z;q^2)_{n+1}(zq;q^2)_{n+1}) = "
            "sum z^(-n) q^n/(zq;q^2)_{n+1}",
            "z", [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, -1, 1), 2, n + 1, N) *
                               inv_poch(mono(1, 0, 1, 1), 2, n + 1, N) *
                               mono(1, 0, 0, static_cast<int>(2 * (sq(n) + n)));
                    },
                    [](int n) { return 2 * (sq(n) + n); }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, 1, 1), 2, n + 1, N) *
                               mono(1, 0, -n, n);
                    },
                    [](int n) { return n; }, N);
            });

        add("cor22_opcol_minus_row",
            "sum q^(2n^2+2n)/((q/z;q^2)_{n+1}(zq;q^2)_{n+1}) = "
            "sum z^n q^n/(q/z;q^2)_{n+1}",
            "z", [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, -1, 1), 2, n + 1, N) *
                               inv_poch(mono(1, 0, 1, 1), 2, n + 1, N) *
                               mono(1, 0, 0, static_cast<int>(2 * (sq(n) + n)));
                    },
                    [](int n) { return 2 * (sq(n) + n); }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, -1, 1), 2, n + 1, N) *
                               mono(1, 0, n, n);
                    },
                    [](int n) { return n; }, N);
            });

        add("cor22_opcolumn_plus_row",
            "sum (z^n q^(n^2+n)/(zq;q^2)_{n+1})^2 = sum z^n q^n/(zq;q^2)_{n+1}",
            "z", [](int N) {
                return sum_series(
                    [N](int n) {
                        const LaurentSeries t =
                            inv_poch(mono(1, 0, 1, 1), 2, n + 1, N) *
                            mono(1, 0, n, static_cast<int>(sq(n) + n));
                        return t * t;
                    },
                    [](int n) { return 2 * (sq(n) + n); }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(1, 0, 1, 1), 2, n + 1, N) *
                               mono(1, 0, n, n);
                    },
                    [](int n) { return n; }, N);
            });

        add("signed_oprow",
            "sum z^n q^(2n^2+2n)/((-q;q^2)_{n+1}(-zq;q^2)_{n+1}) = "
            "sum (-q)^n/(-zq;q^2)_{n+1}",
            "z", [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(-1, 0, 0, 1), 2, n + 1, N) *
                               inv_poch(mono(-1, 0, 1, 1), 2, n + 1, N) *
                               mono(1, 0, n, static_cast<int>(2 * (sq(n) + n)));
                    },
                    [](int n) { return 2 * (sq(n) + n); }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(-1, 0, 1, 1), 2, n + 1, N) *
                               (sign_pow(n) * mono(1, 0, 0, n));
                    },
                    [](int n) { return n; }, N);
            });

        add("signed_opcol",
            "sum z^n q^(2n^2+2n)/((-q;q^2)_{n+1}(-zq;q^2)_{n+1}) = "
            "sum z^n (-q)^n/(-q;q^2)_{n+1}",
            "z", [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(-1, 0, 0, 1), 2, n + 1, N) *
                               inv_poch(mono(-1, 0, 1, 1), 2, n + 1, N) *
                               mono(1, 0, n, static_cast<int>(2 * (sq(n) + n)));
                    },
                    [](int n) { return 2 * (sq(n) + n); }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(-1, 0, 0, 1), 2, n + 1, N) *
                               (sign_pow(n) * mono(1, 0, n, n));
                    },
                    [](int n) { return n; }, N);
            });

        add("signed_oprow_minus_col",
            "sum q^(2n^2+2n)/((-q/z;q^2)_{n+1}(-zq;q^2)_{n+1}) = "
            "sum z^(-n) (-q)^n/(-zq;q^2)_{n+1}",
            "z", [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(-1, 0, -1, 1), 2, n + 1, N) *
                               inv_poch(mono(-1, 0, 1, 1), 2, n + 1, N) *
                               mono(1, 0, 0, static_cast<int>(2 * (sq(n) + n)));
                    },
                    [](int n) { return 2 * (sq(n) + n); }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(-1, 0, 1, 1), 2, n + 1, N) *
                               (sign_pow(n) * mono(1, 0, -n, n));
                    },
                    [](int n) { return n; }, N);
            });

        add("signed_opcol_minus_row",
            "sum q^(2n^2+2n)/((-q/z;q^2)_{n+1}(-zq;q^2)_{n+1}) = "
            "sum z^n (-q)^n/(-q/z;q^2)_{n+1}",
            "z", [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(-1, 0, -1, 1), 2, n + 1, N) *
                               inv_poch(mono(-1, 0, 1, 1), 2, n + 1, N) *
                               mono(1, 0, 0, static_cast<int>(2 * (sq(n) + n)));
                    },
                    [](int n) { return 2 * (sq(n) + n); }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(-1, 0, -1, 1), 2, n + 1, N) *
                               (sign_pow(n) * mono(1, 0, n, n));
                    },
                    [](int n) { return n; }, N);
            });

        add("signed_oprow_plus_col",
            "sum (z^n q^(n^2+n)/(-zq;q^2)_{n+1})^2 = "
            "sum z^n (-q)^n/(-zq;q^2)_{n+1}",
            "z", [](int N) {
                return sum_series(
                    [N](int n) {
                        const LaurentSeries t =
                            inv_poch(mono(-1, 0, 1, 1), 2, n + 1, N) *
                            mono(1, 0, n, static_cast<int>(sq(n) + n));
                        return t * t;
                    },
                    [](int n) { return 2 * (sq(n) + n); }, N);
            },
            [](int N) {
                return sum_series(
                    [N](int n) {
                        return inv_poch(mono(-1, 0, 1, 1), 2, n + 1, N) *
                               (sign_pow(n) * mono(1, 0, n, n));
                    },
                    [](int n) { return n; }, N);
            });

        // Substitutions into the barred two-parameter functions.  The series
        // depend on the first argument only through its square, so both are
        // taken with squared monomial arguments: alpha^2 = -q^2/z and
        // zbar^2 = yzq^2 for nubar, alpha^2 = yq^2/z and zbar^2 = zq^2 for
        // omegabar.
        add("choi_nutobarnu",
            "nu(y,z;q) = nubar with alpha^2 = -q^2/z, zbar^2 = yzq^2", "yz",
            nu_def, [](int N) {
                const Monomial a2 = mono(-1, 0, -1, 2);
                const Monomial z2 = mono(1, 1, 1, 2);
                const Monomial arg = mono(-1, 0, 0, -3) * a2 * z2;
                return sum_series(
                    [N, a2, z2, arg](int n) {
                        const Monomial num =
                            mono_pow(z2, n) *
                            mono(1, 0, 0, static_cast<int>(sq(n) - n));
                        return inv_poch(arg, 2, n + 1, N + std::max(0, -num.q)) *
                               num;
                    },
                    [z2](int n) { return sq(n) - n + static_cast<long long>(n) * z2.q; },
                    N);
            });

        add("choi_omegatobaromega",
            "omega(y,z;q) = z^-2 * omegabar with alpha^2 = yq^2/z, "
            "zbar^2 = zq^2",
            "yz", omega_def, [](int N) {
                const Monomial a2 = mono(1, 1, -1, 2);
                const Monomial z2 = mono(1, 0, 1, 2);
                const Monomial arg1 = mono(1, 0, 0, -1) * z2;        // zbar^2/q
                const Monomial arg2 = mono(1, 0, 0, -3) * a2 * z2;   // a^2 zbar^2/q^3
                const LaurentSeries sum = sum_series(
                    [N, a2, z2, arg1, arg2](int n) {
                        const Monomial num =
                            mono_pow(a2, n) * mono_pow(z2, 2 * (n + 1)) *
                            mono(1, 0, 0,
                                 static_cast<int>(2 * sq(n - 1) - 6));
                        const int slack = std::max(0, -num.q);
                        return inv_poch(arg1, 2, n + 1, N + slack) *
                               inv_poch(arg2, 2, n + 1, N + slack) * num;
                    },
                    [a2, z2](int n) {
                        return 2 * sq(n - 1) - 6 +
                               static_cast<long long>(n) * a2.q +
                               2LL * (n + 1) * z2.q;
                    },
                    N);
                return sum * mono(1, 0, -2, 0);
            });

        // The tail identity behind the third barred function: the n >= 1
        // part of the thm3_newnu right side equals the whole sum minus 1.
        add("choi_nu3_reduced",
            "sum_{n>=0} (-zq;q^2)_n (yq)^n - 1 = sum_{n>=1} (-zq;q^2)_n (yq)^n",
            "yz",
            [](int N) {
                return newnu_rhs_from(0, N) - LaurentSeries::constant(1, N);
            },
            [](int N) { return newnu_rhs_from(1, N); });

        return r;
    }();
    return entries;
}

const IdentityEntry* find_entry(std::string_view name)
{
    for (const auto& e : registry())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace ferrers
