"""periodlab: a verification laboratory for the computational kernels behind
degenerate Eisenstein constant terms.

The package checks, against independent oracles, the explicit objects that
enter constant-term and rationality computations for GL(n) x GL(n)
convolutions over fields containing a CM subfield:

* ``cmfield``     -- number-field towers, embedding sets, discriminant
                     constants and the square-root discriminant identity;
* ``weights``     -- integer calculus on dominant weights and character
                     infinity types (regularity, the two-sided sign
                     condition, the balanced predicate, archimedean units);
* ``weylkostant`` -- Weyl-group combinatorics: parabolic coset
                     representatives, nilpotent-cohomology lines, the
                     distinguished bottom-degree element, wedge monomials
                     and Galois relabeling signs;
* ``lfactors``    -- exact local L-factor ratios, Gamma_C shift ratios,
                     finite-field Gauss sums, vanishing-order tokens;
* ``intertwine``  -- spherical shell sums (non-archimedean), numerical
                     intertwining integrals (complex places) and the
                     symbolic constant-term assembly with holomorphy audit;
* ``cli``         -- command-line front end emitting verification reports.
"""

__version__ = "0.1.0"
