#include "qd/families.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qd/oriented_disc.hpp"

namespace qd {

using Complex = std::complex<double>;

RationalMapd base_map() { return ft_map(0.0); }

RationalMapd ft_map(Complex t) {
    return RationalMapd::checked(Polynomiald({t, Complex(1)}), Polynomiald({Complex(1), 0, 0, Complex(0.5)}));
}

std::array<SpherePointd, 3> ft_critical_triple(Complex t) {
    std::vector<Complex> finite;
    for (const auto& c : critical_points(ft_map(t)))
        if (c.point.is_finite()) finite.push_back(c.point.value());
    if (finite.size() != 3) throw Error("f_t: expected three finite critical points");

    std::sort(finite.begin(), finite.end(),
              [](Complex a, Complex b) { return std::abs(std::arg(a)) < std::abs(std::arg(b)); });
    const Complex c1 = finite[0];
    // Orientation around the circumcircle decides the order of the other two.
    const auto d = disc_through(SpherePointd(c1), SpherePointd(finite[1]), SpherePointd(finite[2]));
    if (d.kind() == OrientedDiscd::Kind::Exterior) std::swap(finite[1], finite[2]);
    return {SpherePointd(c1), SpherePointd(finite[1]), SpherePointd(finite[2])};
}

}  // namespace qd
