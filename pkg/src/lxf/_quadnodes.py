"""Gauss-Legendre nodes and weights on [-1, 1] as (hi, lo) double-double pairs.

Generated by tools/gen_quadnodes.py -- do not edit by hand.
"""

GL20_NODES = (
    (-0.9931285991850949, -4.0125692717995897e-17),
    (-0.9639719272779138, 1.8016704796146567e-17),
    (-0.912234428251326, 4.0267600310095046e-17),
    (-0.8391169718222188, -4.1065867315850824e-17),
    (-0.7463319064601508, 3.109202074074545e-18),
    (-0.636053680726515, -4.73785846574601e-19),
    (-0.5108670019508271, 2.84952683625147e-17),
    (-0.37370608871541955, -1.191005070671823e-17),
    (-0.22778585114164507, -9.884156488012629e-18),
    (-0.07652652113349734, 4.557072655796525e-18),
    (0.07652652113349734, -4.557072655796525e-18),
    (0.22778585114164507, 9.884156488012629e-18),
    (0.37370608871541955, 1.191005070671823e-17),
    (0.5108670019508271, -2.84952683625147e-17),
    (0.636053680726515, 4.73785846574601e-19),
    (0.7463319064601508, -3.109202074074545e-18),
    (0.8391169718222188, 4.1065867315850824e-17),
    (0.912234428251326, -4.0267600310095046e-17),
    (0.9639719272779138, -1.8016704796146567e-17),
    (0.9931285991850949, 4.0125692717995897e-17),
)

GL20_WEIGHTS = (
    (0.017614007139152118, 4.3067520806280603e-19),
    (0.04060142980038694, 2.6688577065676327e-18),
    (0.06267204833410907, -4.2658003813625565e-18),
    (0.08327674157670475, -6.018929287851294e-18),
    (0.10193011981724044, -6.5341878677436505e-18),
    (0.11819453196151841, 5.301374412410806e-18),
    (0.13168863844917664, -1.0181179424087636e-17),
    (0.14209610931838204, 1.0153688127497397e-17),
    (0.14917298647260374, 5.450889017016148e-18),
    (0.15275338713072584, 1.340295334535119e-17),
    (0.15275338713072584, 1.340295334535119e-17),
    (0.14917298647260374, 5.450889017016148e-18),
    (0.14209610931838204, 1.0153688127497397e-17),
    (0.13168863844917664, -1.0181179424087636e-17),
    (0.11819453196151841, 5.301374412410806e-18),
    (0.10193011981724044, -6.5341878677436505e-18),
    (0.08327674157670475, -6.018929287851294e-18),
    (0.06267204833410907, -4.2658003813625565e-18),
    (0.04060142980038694, 2.6688577065676327e-18),
    (0.017614007139152118, 4.3067520806280603e-19),
)

GL40_NODES = (
    (-0.9982377097105593, 5.0814263371789e-17),
    (-0.990726238699457, -3.2839887741772983e-17),
    (-0.9772599499837743, 3.823338471031511e-17),
    (-0.9579168192137917, 2.5715324051633767e-17),
    (-0.9328128082786765, -1.3747581609970865e-17),
    (-0.9020988069688743, 4.8196560282165127e-17),
    (-0.8659595032122595, -5.2255223997672983e-17),
    (-0.8246122308333117, 3.5833443755224796e-17),
    (-0.7783056514265194, 3.04284904008729e-17),
    (-0.7273182551899271, -4.611496368849061e-18),
    (-0.6719566846141796, 1.8470757253910518e-17),
    (-0.6125538896679802, -4.871507301568712e-17),
    (-0.5494671250951282, -1.8288834773642444e-17),
    (-0.4830758016861787, -1.6593811430996348e-17),
    (-0.413779204371605, -2.095249418877874e-17),
    (-0.3419940908257585, 1.6941289944747572e-17),
    (-0.2681521850072537, 3.859521100609538e-18),
    (-0.1926975807013711, 7.565744322583385e-18),
    (-0.11608407067525521, 1.9085227190063375e-18),
    (-0.03877241750605082, 8.331790327107182e-19),
    (0.03877241750605082, -8.331790327107182e-19),
    (0.11608407067525521, -1.9085227190063375e-18),
    (0.1926975807013711, -7.565744322583385e-18),
    (0.2681521850072537, -3.859521100609538e-18),
    (0.3419940908257585, -1.6941289944747572e-17),
    (0.413779204371605, 2.095249418877874e-17),
    (0.4830758016861787, 1.6593811430996348e-17),
    (0.5494671250951282, 1.8288834773642444e-17),
    (0.6125538896679802, 4.871507301568712e-17),
    (0.6719566846141796, -1.8470757253910518e-17),
    (0.7273182551899271, 4.611496368849061e-18),
    (0.7783056514265194, -3.04284904008729e-17),
    (0.8246122308333117, -3.5833443755224796e-17),
    (0.8659595032122595, 5.2255223997672983e-17),
    (0.9020988069688743, -4.8196560282165127e-17),
    (0.9328128082786765, 1.3747581609970865e-17),
    (0.9579168192137917, -2.5715324051633767e-17),
    (0.9772599499837743, -3.823338471031511e-17),
    (0.990726238699457, 3.2839887741772983e-17),
    (0.9982377097105593, -5.0814263371789e-17),
)

GL40_WEIGHTS = (
    (0.004521277098533191, 3.4220873024376216e-19),
    (0.010498284531152813, 8.217887162215783e-19),
    (0.01642105838190789, -8.100469526806774e-19),
    (0.02224584919416696, -1.1231731329769518e-18),
    (0.0279370069800234, 1.521338146577001e-18),
    (0.033460195282547844, 3.028404468340761e-18),
    (0.038782167974472016, 1.336971743328169e-18),
    (0.04387090818567327, 3.4383018360767714e-18),
    (0.04869580763507223, 4.7195493019661935e-19),
    (0.05322784698393682, 1.1774775198347453e-18),
    (0.05743976909939155, -8.095970282184989e-19),
    (0.06130624249292894, 1.5402315893257328e-18),
    (0.06480401345660104, -4.21218761298404e-18),
    (0.0679120458152339, 5.332066509407581e-18),
    (0.07061164739128678, -6.664683382430129e-19),
    (0.07288658239580406, -2.446638956977294e-18),
    (0.07472316905796826, 3.0582450256952924e-18),
    (0.07611036190062624, 7.446698738593667e-19),
    (0.07703981816424797, -6.765789737079761e-18),
    (0.0775059479784248, 6.163307001890504e-18),
    (0.0775059479784248, 6.163307001890504e-18),
    (0.07703981816424797, -6.765789737079761e-18),
    (0.07611036190062624, 7.446698738593667e-19),
    (0.07472316905796826, 3.0582450256952924e-18),
    (0.07288658239580406, -2.446638956977294e-18),
    (0.07061164739128678, -6.664683382430129e-19),
    (0.0679120458152339, 5.332066509407581e-18),
    (0.06480401345660104, -4.21218761298404e-18),
    (0.06130624249292894, 1.5402315893257328e-18),
    (0.05743976909939155, -8.095970282184989e-19),
    (0.05322784698393682, 1.1774775198347453e-18),
    (0.04869580763507223, 4.7195493019661935e-19),
    (0.04387090818567327, 3.4383018360767714e-18),
    (0.038782167974472016, 1.336971743328169e-18),
    (0.033460195282547844, 3.028404468340761e-18),
    (0.0279370069800234, 1.521338146577001e-18),
    (0.02224584919416696, -1.1231731329769518e-18),
    (0.01642105838190789, -8.100469526806774e-19),
    (0.010498284531152813, 8.217887162215783e-19),
    (0.004521277098533191, 3.4220873024376216e-19),
)

