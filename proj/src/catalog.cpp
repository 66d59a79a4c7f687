/**
 * @file catalog.cpp
 * @brief Catalog data as presentation-file text, parsed and verified on first use.
 */
#include "qdual/catalog.hpp"

#include "qdual/errors.hpp"
#include "qdual/hopf.hpp"
#include "qdual/parse.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace qdual {

namespace {

// ---------------------------------------------------------------- sl2

const char* kUqSl2Hat = R"(algebra Uq_sl2_hat
class quea
generators F, H, Gamma, E, K, Kinv
inverse K, Kinv
relation K - 1 - (q-1)*H
relation Kinv - 1 - (q-1)*H + (q-q^-1)*Gamma
relation Gamma*H - H*Gamma
relation E*F - F*E - Gamma
relation H*F - q^-2*F*H + q^-2*(q+1)*F
relation Gamma*F - q^-2*F*Gamma + (q+q^-1)*F*Kinv
relation H*E - q^2*E*H - (q+1)*E
relation Gamma*E - q^2*E*Gamma - (q+q^-1)*E*Kinv
relation K*F - q^-2*F*K
relation Kinv*F - q^2*F*Kinv
relation K*E - q^2*E*K
relation Kinv*E - q^-2*E*Kinv
relation (q-1)*H - K + 1
relation (q-q^-1)*Gamma - K + Kinv
relation H*(1 + Kinv) - (1+q^-1)*Gamma
coproduct F = F @ Kinv + 1 @ F
coproduct H = H @ 1 + K @ H
coproduct Gamma = Gamma @ K + Kinv @ Gamma
coproduct E = E @ 1 + K @ E
coproduct K = K @ K
coproduct Kinv = Kinv @ Kinv
counit F = 0
counit H = 0
counit Gamma = 0
counit E = 0
counit K = 1
counit Kinv = 1
antipode F = -F*K
antipode H = -Kinv*H
antipode Gamma = -Gamma
antipode E = -Kinv*E
antipode K = Kinv
antipode Kinv = K
lattice span: F^a H^b Gamma^c E^d
grading F = -1
grading E = 1
)";

const char* kUqSl2Tilde = R"(algebra Uq_sl2_tilde
class qfa
generators Fd, K, Kinv, Gammad, Ed, Hd
inverse K, Kinv
weight Gammad = 2
relation Hd - K + 1
relation (1 + q^-1)*Gammad - K + Kinv
relation Gammad*K - K*Gammad
relation Gammad*Kinv - Kinv*Gammad
relation Ed*Fd - Fd*Ed - (q-1)*Gammad
relation K*Fd - q^-2*Fd*K
relation Kinv*Fd - q^2*Fd*Kinv
relation K*Ed - q^2*Ed*K
relation Kinv*Ed - q^-2*Ed*Kinv
relation Gammad*Fd - q^-2*Fd*Gammad + (q-1)*(q+q^-1)*Fd*Kinv
relation Gammad*Ed - q^2*Ed*Gammad - (q-1)*(q+q^-1)*Ed*Kinv
relation (K - 1)*(1 + Kinv) - (1 + q^-1)*Gammad
coproduct Fd = Fd @ Kinv + 1 @ Fd
coproduct K = K @ K
coproduct Kinv = Kinv @ Kinv
coproduct Gammad = Gammad @ K + Kinv @ Gammad
coproduct Ed = Ed @ 1 + K @ Ed
coproduct Hd = Hd @ 1 + K @ Hd
counit Fd = 0
counit K = 1
counit Kinv = 1
counit Gammad = 0
counit Ed = 0
counit Hd = 0
antipode Fd = -Fd*K
antipode K = Kinv
antipode Kinv = K
antipode Gammad = -Gammad
antipode Ed = -Kinv*Ed
antipode Hd = -Kinv*Hd
lattice span: Fd^a K^z Gammad^c Ed^d
grading Fd = -1
grading Ed = 1
)";

const char* kUqSl2HatSc = R"(algebra Uq_sl2_hat_sc
class quea
generators F, L, Linv, D, Gamma, E
weight Gamma = 2
inverse L, Linv
relation (q-1)*D - L + 1
relation (q-q^-1)*Gamma - L^2 + Linv^2
relation Gamma*D - D*Gamma
relation L*D - D*L
relation Linv*D - D*Linv
relation L*Gamma - Gamma*L
relation Linv*Gamma - Gamma*Linv
relation E*F - F*E - Gamma
relation D*F - q^-1*F*D + q^-1*F
relation D*E - q*E*D - E
relation L*F - q^-1*F*L
relation L*E - q*E*L
relation Linv*F - q*F*Linv
relation Linv*E - q^-1*E*Linv
relation Gamma*F - q^-2*F*Gamma + (q+q^-1)*F*Linv^2
relation Gamma*E - q^2*E*Gamma - (q+q^-1)*E*Linv^2
coproduct F = F @ Linv^2 + 1 @ F
coproduct D = D @ 1 + L @ D
coproduct Gamma = Gamma @ L^2 + Linv^2 @ Gamma
coproduct L = L @ L
coproduct Linv = Linv @ Linv
coproduct E = E @ 1 + L^2 @ E
counit F = 0
counit D = 0
counit Gamma = 0
counit L = 1
counit Linv = 1
counit E = 0
antipode F = -F*L^2
antipode D = -Linv*D
antipode Gamma = -Gamma
antipode L = Linv
antipode Linv = L
antipode E = -Linv^2*E
lattice span: F^a L^z D^b Gamma^c E^d
grading F = -1
grading E = 1
)";

const char* kUqSl2ScTilde = R"(algebra Uq_sl2_sc_tilde
class qfa
generators Fd, L, Linv, Gammad, Ed
inverse L, Linv
weight Gammad = 2
relation (1 + q^-1)*Gammad - L^2 + Linv^2
relation Gammad*L - L*Gammad
relation Gammad*Linv - Linv*Gammad
relation Ed*Fd - Fd*Ed - (q-1)*Gammad
relation L*Fd - q^-1*Fd*L
relation Linv*Fd - q*Fd*Linv
relation L*Ed - q*Ed*L
relation Linv*Ed - q^-1*Ed*Linv
relation Gammad*Fd - q^-2*Fd*Gammad + (q-1)*(q+q^-1)*Fd*Linv^2
relation Gammad*Ed - q^2*Ed*Gammad - (q-1)*(q+q^-1)*Ed*Linv^2
coproduct Fd = Fd @ Linv^2 + 1 @ Fd
coproduct L = L @ L
coproduct Linv = Linv @ Linv
coproduct Gammad = Gammad @ L^2 + Linv^2 @ Gammad
coproduct Ed = Ed @ 1 + L^2 @ Ed
counit Fd = 0
counit L = 1
counit Linv = 1
counit Gammad = 0
counit Ed = 0
antipode Fd = -Fd*L^2
antipode L = Linv
antipode Linv = L
antipode Gammad = -Gammad
antipode Ed = -Linv^2*Ed
lattice span: Fd^a L^z Gammad^c Ed^d
grading Fd = -1
grading Ed = 1
)";

const char* kFqSl2Hat = R"(algebra Fq_SL2_hat
class qfa
generators c, a, d, b
relation a*b - q*b*a
relation a*c - q*c*a
relation b*d - q*d*b
relation c*d - q*d*c
relation b*c - c*b
relation a*d - d*a - (q-q^-1)*b*c
relation a*d - q*b*c - 1
coproduct a = a @ a + b @ c
coproduct b = a @ b + b @ d
coproduct c = c @ a + d @ c
coproduct d = c @ b + d @ d
counit a = 1
counit b = 0
counit c = 0
counit d = 1
antipode a = d
antipode b = -q^-1*b
antipode c = -q*c
antipode d = a
lattice free: c^g a^k d^l b^e
grading b = 1
grading c = -1
)";

const char* kFqSl2Tilde = R"(algebra Fq_SL2_tilde
class quea
generators F, Hp, Hm, E
relation Hp*E - q*E*Hp - E
relation Hp*F - q*F*Hp - F
relation E*Hm - q*Hm*E - E
relation F*Hm - q*Hm*F - F
relation E*F - F*E
relation Hp*Hm - Hm*Hp - (q-q^-1)*E*F
relation Hm + Hp - (q-1)*(q*E*F - Hp*Hm)
coproduct Hp = Hp @ 1 + 1 @ Hp + (q-1)*(Hp @ Hp + E @ F)
coproduct E = E @ 1 + 1 @ E + (q-1)*(Hp @ E + E @ Hm)
coproduct F = F @ 1 + 1 @ F + (q-1)*(F @ Hp + Hm @ F)
coproduct Hm = Hm @ 1 + 1 @ Hm + (q-1)*(Hm @ Hm + F @ E)
counit F = 0
counit Hp = 0
counit Hm = 0
counit E = 0
antipode Hp = Hm
antipode Hm = Hp
antipode E = -q^-1*E
antipode F = -q*F
lattice span: F^f Hp^a Hm^d E^e
grading E = 1
grading F = -1
)";

// ---------------------------------------------------------------- E2

const char* kUqE2sHat = R"(algebra Uq_e2_s_hat
class quea
generators F, Dp, Dm, E
relation Dp*E - q*E*Dp - E
relation F*Dp - q*Dp*F - F
relation E*Dm - q*Dm*E - E
relation Dm*F - q*F*Dm - F
relation E*F - F*E
relation Dp*Dm - Dm*Dp
relation Dp + Dm + (q-1)*Dp*Dm
coproduct E = E @ 1 + 1 @ E + 2*(q-1)*Dp @ E + (q-1)^2*Dp^2 @ E
coproduct Dp = Dp @ 1 + 1 @ Dp + (q-1)*Dp @ Dp
coproduct Dm = Dm @ 1 + 1 @ Dm + (q-1)*Dm @ Dm
coproduct F = F @ 1 + 1 @ F + 2*(q-1)*F @ Dm + (q-1)^2*F @ Dm^2
counit F = 0
counit Dp = 0
counit Dm = 0
counit E = 0
antipode E = -E - 2*(q-1)*Dm*E - (q-1)^2*Dm^2*E
antipode Dp = Dm
antipode Dm = Dp
antipode F = -F - 2*(q-1)*F*Dp - (q-1)^2*F*Dp^2
lattice span: F^a Dp^b Dm^c E^d
grading F = -1
grading E = 1
)";

const char* kUqE2sTilde = R"(algebra Uq_e2_s_tilde
class qfa
generators Fc, Lc, Lcinv, Ec
inverse Lc, Lcinv
relation Ec*Fc - Fc*Ec
relation Lc*Fc - q^-1*Fc*Lc
relation Lcinv*Fc - q*Fc*Lcinv
relation Lc*Ec - q*Ec*Lc
relation Lcinv*Ec - q^-1*Ec*Lcinv
coproduct Fc = Fc @ Lcinv + Lc @ Fc
coproduct Lc = Lc @ Lc
coproduct Lcinv = Lcinv @ Lcinv
coproduct Ec = Ec @ Lcinv + Lc @ Ec
counit Fc = 0
counit Lc = 1
counit Lcinv = 1
counit Ec = 0
antipode Fc = -q*Fc
antipode Lc = Lcinv
antipode Lcinv = Lc
antipode Ec = -q^-1*Ec
lattice free: Fc^a Lc^z Ec^d
grading Fc = -1
grading Ec = 1
)";

const char* kUqE2aHat = R"(algebra Uq_e2_a_hat
class quea
generators F, Hp, Hm, E
relation E*F - F*E
relation Hp*E - q^2*E*Hp - (q+1)*E
relation F*Hp - q^2*Hp*F - (q+1)*F
relation E*Hm - q^2*Hm*E - (q+1)*E
relation Hm*F - q^2*F*Hm - (q+1)*F
relation Hp*Hm - Hm*Hp
relation Hp + Hm + (q-1)*Hp*Hm
coproduct E = E @ 1 + 1 @ E + (q-1)*Hp @ E
coproduct Hp = Hp @ 1 + 1 @ Hp + (q-1)*Hp @ Hp
coproduct Hm = Hm @ 1 + 1 @ Hm + (q-1)*Hm @ Hm
coproduct F = F @ 1 + 1 @ F + (q-1)*F @ Hm
counit F = 0
counit Hp = 0
counit Hm = 0
counit E = 0
antipode E = -E - (q-1)*Hm*E
antipode Hp = Hm
antipode Hm = Hp
antipode F = -F - (q-1)*F*Hp
lattice span: F^a Hp^b Hm^c E^d
grading F = -1
grading E = 1
)";

const char* kUqE2aTilde = R"(algebra Uq_e2_a_tilde
class qfa
generators Fd, K, Kinv, Ed
inverse K, Kinv
relation Ed*Fd - Fd*Ed
relation K*Fd - q^-2*Fd*K
relation Kinv*Fd - q^2*Fd*Kinv
relation K*Ed - q^2*Ed*K
relation Kinv*Ed - q^-2*Ed*Kinv
coproduct Fd = Fd @ Kinv + 1 @ Fd
coproduct K = K @ K
coproduct Kinv = Kinv @ Kinv
coproduct Ed = Ed @ 1 + K @ Ed
counit Fd = 0
counit K = 1
counit Kinv = 1
counit Ed = 0
antipode Fd = -Fd*K
antipode K = Kinv
antipode Kinv = K
antipode Ed = -Kinv*Ed
lattice free: Fd^a K^z Ed^d
grading Fd = -1
grading Ed = 1
)";

const char* kFqE2Hat = R"(algebra Fq_E2_hat
class qfa
generators b, a, ainv, c
inverse a, ainv
relation a*b - q*b*a
relation a*c - q*c*a
relation b*c - c*b
relation ainv*b - q^-1*b*ainv
relation ainv*c - q^-1*c*ainv
coproduct b = b @ ainv + a @ b
coproduct a = a @ a
coproduct ainv = ainv @ ainv
coproduct c = c @ a + ainv @ c
counit b = 0
counit a = 1
counit ainv = 1
counit c = 0
antipode b = -q^-1*b
antipode a = ainv
antipode ainv = a
antipode c = -q*c
lattice free: b^e a^z c^f
grading b = 1
grading c = -1
)";

const char* kFqE2Tilde = R"(algebra Fq_E2_tilde
class quea
generators E, Dp, Dm, F
relation Dp*E - q*E*Dp - E
relation Dp*F - q*F*Dp - F
relation E*Dm - q*Dm*E - E
relation F*Dm - q*Dm*F - F
relation E*F - F*E
relation Dp*Dm - Dm*Dp
relation Dp + Dm + (q-1)*Dp*Dm
coproduct E = E @ 1 + 1 @ E + (q-1)*(E @ Dm + Dp @ E)
coproduct Dp = Dp @ 1 + 1 @ Dp + (q-1)*Dp @ Dp
coproduct Dm = Dm @ 1 + 1 @ Dm + (q-1)*Dm @ Dm
coproduct F = F @ 1 + 1 @ F + (q-1)*(F @ Dp + Dm @ F)
counit E = 0
counit Dp = 0
counit Dm = 0
counit F = 0
antipode E = -q^-1*E
antipode Dp = Dm
antipode Dm = Dp
antipode F = -q*F
lattice span: E^e Dp^a Dm^b F^f
grading E = 1
grading F = -1
)";

const char* kFqAE2Hat = R"(algebra Fq_aE2_hat
class qfa
generators beta, alpha, alphainv, gamma
inverse alpha, alphainv
relation alpha*beta - q^2*beta*alpha
relation alpha*gamma - q^2*gamma*alpha
relation beta*gamma - q^2*gamma*beta
relation alphainv*beta - q^-2*beta*alphainv
relation alphainv*gamma - q^-2*gamma*alphainv
coproduct beta = beta @ 1 + alpha @ beta
coproduct alpha = alpha @ alpha
coproduct alphainv = alphainv @ alphainv
coproduct gamma = gamma @ 1 + alphainv @ gamma
counit beta = 0
counit alpha = 1
counit alphainv = 1
counit gamma = 0
antipode beta = -alphainv*beta
antipode alpha = alphainv
antipode alphainv = alpha
antipode gamma = -alpha*gamma
lattice free: beta^e alpha^z gamma^f
grading beta = 1
grading gamma = -1
)";

const char* kFqAE2Tilde = R"(algebra Fq_aE2_tilde
class quea
generators Ep, Hp, Hm, Fp
relation Ep*Fp - q^2*Fp*Ep
relation Hp*Ep - q^2*Ep*Hp - (q+1)*Ep
relation Hp*Fp - q^2*Fp*Hp - (q+1)*Fp
relation Ep*Hm - q^2*Hm*Ep - (q+1)*Ep
relation Fp*Hm - q^2*Hm*Fp - (q+1)*Fp
relation Hp*Hm - Hm*Hp
relation Hp + Hm + (q-1)*Hp*Hm
coproduct Ep = Ep @ 1 + 1 @ Ep + (q-1)*Hp @ Ep
coproduct Hp = Hp @ 1 + 1 @ Hp + (q-1)*Hp @ Hp
coproduct Hm = Hm @ 1 + 1 @ Hm + (q-1)*Hm @ Hm
coproduct Fp = Fp @ 1 + 1 @ Fp + (q-1)*Hm @ Fp
counit Ep = 0
counit Hp = 0
counit Hm = 0
counit Fp = 0
antipode Ep = -Ep - (q-1)*Hm*Ep
antipode Hp = Hm
antipode Hm = Hp
antipode Fp = -Fp - (q-1)*Hp*Fp
lattice span: Ep^e Hp^a Hm^b Fp^f
grading Ep = 1
grading Fp = -1
)";

// ---------------------------------------------------------------- classical targets

const char* kFsSl2Star = R"(algebra F_sSL2star
class classical
generators x, z, zinv, y
inverse z, zinv
relation z*x - x*z
relation zinv*x - x*zinv
relation y*x - x*y
relation y*z - z*y
relation y*zinv - zinv*y
coproduct x = x @ zinv + z @ x
coproduct z = z @ z
coproduct zinv = zinv @ zinv
coproduct y = y @ zinv + z @ y
counit x = 0
counit z = 1
counit zinv = 1
counit y = 0
antipode x = -x
antipode z = zinv
antipode zinv = z
antipode y = -y
lattice free: x^a z^k y^b
bracket x, y = 1/2*z^2 - 1/2*zinv^2
bracket z, x = z*x
bracket z, y = -z*y
bracket zinv, x = -zinv*x
bracket zinv, y = zinv*y
)";

const char* kFsE2Star = R"(algebra F_sE2star
class classical
generators x, z, zinv, y
inverse z, zinv
relation z*x - x*z
relation zinv*x - x*zinv
relation y*x - x*y
relation y*z - z*y
relation y*zinv - zinv*y
coproduct x = x @ zinv + z @ x
coproduct z = z @ z
coproduct zinv = zinv @ zinv
coproduct y = y @ zinv + z @ y
counit x = 0
counit z = 1
counit zinv = 1
counit y = 0
antipode x = -x
antipode z = zinv
antipode zinv = z
antipode y = -y
lattice free: x^a z^k y^b
bracket z, x = z*x
bracket z, y = -z*y
bracket zinv, x = -zinv*x
bracket zinv, y = zinv*y
)";

const char* kUSl2Star = R"(algebra U_sl2star
class classical
generators f, h, e
relation h*e - e*h - e
relation h*f - f*h - f
relation e*f - f*e
coproduct f = f @ 1 + 1 @ f
coproduct h = h @ 1 + 1 @ h
coproduct e = e @ 1 + 1 @ e
counit f = 0
counit h = 0
counit e = 0
antipode f = -f
antipode h = -h
antipode e = -e
lattice free: f^a h^b e^c
cobracket f = 2*(f @ h - h @ f)
cobracket h = e @ f - f @ e
cobracket e = 2*(h @ e - e @ h)
)";

const char* kUE2Star = R"(algebra U_e2star
class classical
generators f, h, e
relation h*e - e*h - 2*e
relation h*f - f*h - 2*f
relation e*f - f*e
coproduct f = f @ 1 + 1 @ f
coproduct h = h @ 1 + 1 @ h
coproduct e = e @ 1 + 1 @ e
counit f = 0
counit h = 0
counit e = 0
antipode f = -f
antipode h = -h
antipode e = -e
lattice free: f^a h^b e^c
cobracket f = f @ h - h @ f
cobracket h = 0*(h @ h)
cobracket e = h @ e - e @ h
)";

// ---------------------------------------------------------------- generated families

std::string idx(const std::string& base, int i) { return base + std::to_string(i); }

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

// Relations making every pair in `gens` commute, except the listed pairs.
void commute_all(std::ostringstream& os, const std::vector<std::string>& gens,
                 const std::function<bool(const std::string&, const std::string&)>& skip) {
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!skip(gens[i], gens[j])) os << "relation " << gens[j] << "*" << gens[i] << " - " << gens[i] << "*" << gens[j] << "\n";
}

bool is_inverse_pair(const std::string& a, const std::string& b) { return b == a + "inv" || a == b + "inv"; }

// Shared shape of the four Heisenberg QUEAs: F_i, <cartan...>, E_i with [E_i, F_j] = delta_ij * gamma_name.
struct HeisenbergShape {
    std::string name, cls, fname, ename, gamma, lattice;
    std::vector<std::string> cartan;  // in PBW order, between F's and E's
    std::vector<std::string> weights, extra_relations, structure;  // file lines
    std::string bracket_scale;  // factor in E_i F_i - F_i E_i = scale * gamma
};

std::string heisenberg_text(const HeisenbergShape& s, int n) {
    std::vector<std::string> fs, es;
    for (int i = 1; i <= n; ++i) {
        fs.push_back(idx(s.fname, i));
        es.push_back(idx(s.ename, i));
    }
    std::vector<std::string> gens = fs;
    gens.insert(gens.end(), s.cartan.begin(), s.cartan.end());
    gens.insert(gens.end(), es.begin(), es.end());
    std::ostringstream os;
    os << "algebra " << s.name << "(" << n << ")\nclass " << s.cls << "\ngenerators " << join(gens) << "\n";
    for (const std::string& c : s.cartan)
        if (c.size() > 3 && c.substr(c.size() - 3) == "inv") os << "inverse " << c.substr(0, c.size() - 3) << ", " << c << "\n";
    for (const std::string& w : s.weights) os << w << "\n";
    for (const std::string& r : s.extra_relations) os << "relation " << r << "\n";
    auto skip = [&](const std::string& a, const std::string& b) {
        if (is_inverse_pair(a, b)) return true;
        for (int i = 1; i <= n; ++i)
            if ((a == idx(s.fname, i) && b == idx(s.ename, i)) || (b == idx(s.fname, i) && a == idx(s.ename, i))) return true;
        return false;
    };
    commute_all(os, gens, skip);
    for (int i = 1; i <= n; ++i)
        os << "relation " << es[static_cast<size_t>(i - 1)] << "*" << fs[static_cast<size_t>(i - 1)] << " - "
           << fs[static_cast<size_t>(i - 1)] << "*" << es[static_cast<size_t>(i - 1)] << " - " << s.bracket_scale << s.gamma
           << "\n";
    for (std::string line : s.structure) {
        // "@i" lines are instantiated for every index.
        if (line.find("@i") == std::string::npos) {
            os << line << "\n";
            continue;
        }
        for (int i = 1; i <= n; ++i) {
            std::string l = line;
            for (size_t pos; (pos = l.find("@i")) != std::string::npos;) l.replace(pos, 2, std::to_string(i));
            os << l << "\n";
        }
    }
    os << s.lattice << "\n";
    for (int i = 1; i <= n; ++i) os << "grading " << fs[static_cast<size_t>(i - 1)] << " = -1\ngrading " << es[static_cast<size_t>(i - 1)] << " = 1\n";
    return os.str();
}

std::string uq_hn_s_hat(int n) {
    HeisenbergShape s;
    s.name = "Uq_hn_s_hat";
    s.cls = "quea";
    s.fname = "F";
    s.ename = "E";
    s.gamma = "Gamma";
    s.cartan = {"L", "Linv", "D", "Gamma"};
    s.weights = {"weight Gamma = 2"};
    s.extra_relations = {"(q-1)*D - L + 1", "(q-q^-1)*Gamma - L^2 + Linv^2"};
    s.bracket_scale = "";
    s.structure = {"coproduct F@i = F@i @ 1 + Linv^2 @ F@i",
                   "coproduct L = L @ L",
                   "coproduct Linv = Linv @ Linv",
                   "coproduct D = D @ 1 + L @ D",
                   "coproduct Gamma = Gamma @ L^2 + Linv^2 @ Gamma",
                   "coproduct E@i = E@i @ L^2 + 1 @ E@i",
                   "counit F@i = 0",
                   "counit L = 1",
                   "counit Linv = 1",
                   "counit D = 0",
                   "counit Gamma = 0",
                   "counit E@i = 0",
                   "antipode F@i = -L^2*F@i",
                   "antipode L = Linv",
                   "antipode Linv = L",
                   "antipode D = -Linv*D",
                   "antipode Gamma = -Gamma",
                   "antipode E@i = -E@i*Linv^2"};
    s.lattice = "lattice span: F^a L^z D^b Gamma^c E^d";
    return heisenberg_text(s, n);
}

std::string uq_hn_s_tilde(int n) {
    HeisenbergShape s;
    s.name = "Uq_hn_s_tilde";
    s.cls = "qfa";
    s.fname = "Fd";
    s.ename = "Ed";
    s.gamma = "Gammad";
    s.cartan = {"L", "Linv", "Dd", "Gammad"};
    s.weights = {"weight Gammad = 2"};
    s.extra_relations = {"Dd - L + 1", "(1 + q^-1)*Gammad - L^2 + Linv^2"};
    s.bracket_scale = "(q-1)*";
    s.structure = {"coproduct Fd@i = Fd@i @ 1 + Linv^2 @ Fd@i",
                   "coproduct L = L @ L",
                   "coproduct Linv = Linv @ Linv",
                   "coproduct Dd = Dd @ 1 + L @ Dd",
                   "coproduct Gammad = Gammad @ L^2 + Linv^2 @ Gammad",
                   "coproduct Ed@i = Ed@i @ L^2 + 1 @ Ed@i",
                   "counit Fd@i = 0",
                   "counit L = 1",
                   "counit Linv = 1",
                   "counit Dd = 0",
                   "counit Gammad = 0",
                   "counit Ed@i = 0",
                   "antipode Fd@i = -L^2*Fd@i",
                   "antipode L = Linv",
                   "antipode Linv = L",
                   "antipode Dd = -Linv*Dd",
                   "antipode Gammad = -Gammad",
                   "antipode Ed@i = -Ed@i*Linv^2"};
    s.lattice = "lattice span: Fd^a L^z Gammad^c Ed^d";
    return heisenberg_text(s, n);
}

std::string uq_hn_a_hat(int n) {
    HeisenbergShape s;
    s.name = "Uq_hn_a_hat";
    s.cls = "quea";
    s.fname = "F";
    s.ename = "E";
    s.gamma = "Gamma";
    s.cartan = {"K", "Kinv", "H", "Gamma"};
    s.extra_relations = {"(q-1)*H - K + 1", "(q-q^-1)*Gamma - K + Kinv"};
    s.bracket_scale = "";
    s.structure = {"coproduct F@i = F@i @ 1 + Kinv @ F@i",
                   "coproduct K = K @ K",
                   "coproduct Kinv = Kinv @ Kinv",
                   "coproduct H = H @ 1 + K @ H",
                   "coproduct Gamma = Gamma @ Kinv + K @ Gamma",
                   "coproduct E@i = E@i @ K + 1 @ E@i",
                   "counit F@i = 0",
                   "counit K = 1",
                   "counit Kinv = 1",
                   "counit H = 0",
                   "counit Gamma = 0",
                   "counit E@i = 0",
                   "antipode F@i = -K*F@i",
                   "antipode K = Kinv",
                   "antipode Kinv = K",
                   "antipode H = -Kinv*H",
                   "antipode Gamma = -Gamma",
                   "antipode E@i = -E@i*Kinv"};
    s.lattice = "lattice span: F^a K^z H^b Gamma^c E^d";
    return heisenberg_text(s, n);
}

std::string uq_hn_a_tilde(int n) {
    HeisenbergShape s;
    s.name = "Uq_hn_a_tilde";
    s.cls = "qfa";
    s.fname = "Fd";
    s.ename = "Ed";
    s.gamma = "Gammad";
    s.cartan = {"K", "Kinv", "Hd", "Gammad"};
    s.extra_relations = {"Hd - K + 1", "(1 + q^-1)*Gammad - K + Kinv"};
    s.bracket_scale = "(q-1)*";
    s.structure = {"coproduct Fd@i = Fd@i @ 1 + Kinv @ Fd@i",
                   "coproduct K = K @ K",
                   "coproduct Kinv = Kinv @ Kinv",
                   "coproduct Hd = Hd @ 1 + K @ Hd",
                   "coproduct Gammad = Gammad @ K + Kinv @ Gammad",
                   "coproduct Ed@i = Ed@i @ K + 1 @ Ed@i",
                   "counit Fd@i = 0",
                   "counit K = 1",
                   "counit Kinv = 1",
                   "counit Hd = 0",
                   "counit Gammad = 0",
                   "counit Ed@i = 0",
                   "antipode Fd@i = -K*Fd@i",
                   "antipode K = Kinv",
                   "antipode Kinv = K",
                   "antipode Hd = -Kinv*Hd",
                   "antipode Gammad = -Gammad",
                   "antipode Ed@i = -Ed@i*Kinv"};
    s.lattice = "lattice span: Fd^a K^z Gammad^c Ed^d";
    return heisenberg_text(s, n);
}

// Shared shape of F_q[H_n] and its tilde: x_i, z, y_i with x_i z = z x_i + t x_i, y_i z = z y_i + t y_i.
std::string fq_hn_text(int n, bool tilde) {
    std::string xn = tilde ? "E" : "a", zn = tilde ? "H" : "c", yn = tilde ? "F" : "b";
    std::string t = tilde ? "1" : "(q-1)";
    std::vector<std::string> xs, ys, gens;
    for (int i = 1; i <= n; ++i) {
        xs.push_back(idx(xn, i));
        ys.push_back(idx(yn, i));
    }
    gens = xs;
    gens.push_back(zn);
    gens.insert(gens.end(), ys.begin(), ys.end());
    std::ostringstream os;
    os << "algebra " << (tilde ? "Fq_Hn_tilde(" : "Fq_Hn_hat(") << n << ")\nclass " << (tilde ? "quea" : "qfa")
       << "\ngenerators " << join(gens) << "\n";
    commute_all(os, gens, [&](const std::string& a, const std::string& b) { return a == zn || b == zn; });
    for (int i = 1; i <= n; ++i) {
        os << "relation " << xs[static_cast<size_t>(i - 1)] << "*" << zn << " - " << zn << "*" << xs[static_cast<size_t>(i - 1)]
           << " - " << t << "*" << xs[static_cast<size_t>(i - 1)] << "\n";
        os << "relation " << ys[static_cast<size_t>(i - 1)] << "*" << zn << " - " << zn << "*" << ys[static_cast<size_t>(i - 1)]
           << " - " << t << "*" << ys[static_cast<size_t>(i - 1)] << "\n";
    }
    std::string h = tilde ? "(q-1)*" : "";
    std::vector<std::string> cross, prod;
    for (int i = 1; i <= n; ++i) {
        cross.push_back(xs[static_cast<size_t>(i - 1)] + " @ " + ys[static_cast<size_t>(i - 1)]);
        prod.push_back(xs[static_cast<size_t>(i - 1)] + "*" + ys[static_cast<size_t>(i - 1)]);
    }
    os << "coproduct " << zn << " = " << zn << " @ 1 + 1 @ " << zn << " + " << h << "(" << join(cross, " + ") << ")\n";
    os << "counit " << zn << " = 0\nantipode " << zn << " = -" << zn << " + " << h << "(" << join(prod, " + ") << ")\n";
    for (const auto& g : xs) os << "coproduct " << g << " = " << g << " @ 1 + 1 @ " << g << "\ncounit " << g << " = 0\nantipode " << g << " = -" << g << "\n";
    for (const auto& g : ys) os << "coproduct " << g << " = " << g << " @ 1 + 1 @ " << g << "\ncounit " << g << " = 0\nantipode " << g << " = -" << g << "\n";
    os << "lattice free: " << xn << "^a " << zn << "^c " << yn << "^b\n";
    for (const auto& g : xs) os << "grading " << g << " = 1\n";
    for (const auto& g : ys) os << "grading " << g << " = -1\n";
    return os.str();
}

std::string f_s_hn_star(int n, const std::string& name) {
    std::vector<std::string> as, bs, gens;
    for (int i = 1; i <= n; ++i) {
        as.push_back(idx("alpha", i));
        bs.push_back(idx("beta", i));
    }
    gens = as;
    gens.push_back("gamma");
    gens.push_back("gammainv");
    gens.insert(gens.end(), bs.begin(), bs.end());
    std::ostringstream os;
    os << "algebra " << name << "(" << n << ")\nclass classical\ngenerators " << join(gens) << "\ninverse gamma, gammainv\n";
    commute_all(os, gens, is_inverse_pair);
    for (const auto& g : as) os << "coproduct " << g << " = " << g << " @ gamma + gammainv @ " << g << "\ncounit " << g << " = 0\nantipode " << g << " = -" << g << "\n";
    os << "coproduct gamma = gamma @ gamma\ncoproduct gammainv = gammainv @ gammainv\ncounit gamma = 1\ncounit gammainv = 1\n"
          "antipode gamma = gammainv\nantipode gammainv = gamma\n";
    for (const auto& g : bs) os << "coproduct " << g << " = " << g << " @ gamma + gammainv @ " << g << "\ncounit " << g << " = 0\nantipode " << g << " = -" << g << "\n";
    os << "lattice free: alpha^a gamma^k beta^b\n";
    for (int i = 1; i <= n; ++i) os << "bracket " << as[static_cast<size_t>(i - 1)] << ", " << bs[static_cast<size_t>(i - 1)] << " = 1/2*gamma^2 - 1/2*gammainv^2\n";
    return os.str();
}

std::string u_hn_star(int n) {
    std::vector<std::string> es, fs, gens;
    for (int i = 1; i <= n; ++i) {
        es.push_back(idx("e", i));
        fs.push_back(idx("f", i));
    }
    gens = es;
    gens.push_back("h");
    gens.insert(gens.end(), fs.begin(), fs.end());
    std::ostringstream os;
    os << "algebra U_hnstar(" << n << ")\nclass classical\ngenerators " << join(gens) << "\n";
    commute_all(os, gens, [](const std::string& a, const std::string& b) { return a == "h" || b == "h"; });
    std::vector<std::string> cross;
    for (int i = 1; i <= n; ++i) {
        os << "relation " << es[static_cast<size_t>(i - 1)] << "*h - h*" << es[static_cast<size_t>(i - 1)] << " - " << es[static_cast<size_t>(i - 1)] << "\n";
        os << "relation " << fs[static_cast<size_t>(i - 1)] << "*h - h*" << fs[static_cast<size_t>(i - 1)] << " - " << fs[static_cast<size_t>(i - 1)] << "\n";
        cross.push_back(es[static_cast<size_t>(i - 1)] + " @ " + fs[static_cast<size_t>(i - 1)] + " - " + fs[static_cast<size_t>(i - 1)] + " @ " + es[static_cast<size_t>(i - 1)]);
    }
    for (const auto& g : gens) os << "coproduct " << g << " = " << g << " @ 1 + 1 @ " << g << "\ncounit " << g << " = 0\nantipode " << g << " = -" << g << "\n";
    os << "lattice free: e^a h^b f^c\ncobracket h = " << join(cross, " + ") << "\n";
    for (const auto& g : es) os << "cobracket " << g << " = 0*(h @ h)\n";
    for (const auto& g : fs) os << "cobracket " << g << " = 0*(h @ h)\n";
    return os.str();
}

// ---------------------------------------------------------------- SL3

std::string rho(int i, int j) { return "rho" + std::to_string(i) + std::to_string(j); }

int inversions(const std::vector<int>& perm) {
    int c = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++c;
    return c;
}

// Quantum determinant of the submatrix on the given rows and columns.
std::string quantum_minor(const std::vector<int>& rows, const std::vector<int>& cols) {
    std::vector<int> perm(cols.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::vector<std::string> terms;
    do {
        int l = inversions(perm);
        std::string t = "(-q)^" + std::to_string(l);
        for (size_t k = 0; k < rows.size(); ++k) t += "*" + rho(rows[k], cols[static_cast<size_t>(perm[k])]);
        terms.push_back(t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return "(" + join(terms, " + ") + ")";
}

std::string fq_sl3_hat() {
    std::ostringstream os;
    const std::vector<std::pair<int, int>> order = {{3, 1}, {2, 1}, {3, 2}, {1, 1}, {2, 2}, {3, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::string> gens;
    for (auto [i, j] : order) gens.push_back(rho(i, j));
    os << "algebra Fq_SL3_hat\nclass qfa\ngenerators " << join(gens) << "\n";
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = j + 1; k <= 3; ++k) os << "relation " << rho(i, j) << "*" << rho(i, k) << " - q*" << rho(i, k) << "*" << rho(i, j) << "\n";
    for (int k = 1; k <= 3; ++k)
        for (int i = 1; i <= 3; ++i)
            for (int h = i + 1; h <= 3; ++h) os << "relation " << rho(i, k) << "*" << rho(h, k) << " - q*" << rho(h, k) << "*" << rho(i, k) << "\n";
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                for (int l = k + 1; l <= 3; ++l) {
                    os << "relation " << rho(i, l) << "*" << rho(j, k) << " - " << rho(j, k) << "*" << rho(i, l) << "\n";
                    os << "relation " << rho(i, k) << "*" << rho(j, l) << " - " << rho(j, l) << "*" << rho(i, k) << " - (q-q^-1)*"
                       << rho(i, l) << "*" << rho(j, k) << "\n";
                }
    os << "relation " << quantum_minor({1, 2, 3}, {1, 2, 3}) << " - 1\n";
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            std::vector<std::string> terms;
            for (int k = 1; k <= 3; ++k) terms.push_back(rho(i, k) + " @ " + rho(k, j));
            os << "coproduct " << rho(i, j) << " = " << join(terms, " + ") << "\n";
            os << "counit " << rho(i, j) << " = " << (i == j ? 1 : 0) << "\n";
            std::vector<int> rows, cols;
            for (int r = 1; r <= 3; ++r)
                if (r != j) rows.push_back(r);
            for (int c = 1; c <= 3; ++c)
                if (c != i) cols.push_back(c);
            os << "antipode " << rho(i, j) << " = (-q)^" << (i - j) << "*" << quantum_minor(rows, cols) << "\n";
            os << "grading " << rho(i, j) << " = " << (j - i) << "\n";
        }
    os << "lattice free: rho^N with min(N11, N22, N33) = 0\n";
    return os.str();
}

// ---------------------------------------------------------------- registry

struct Recipe {
    std::string family;
    bool parameterized = false;
    std::function<std::string(int)> hat;
    std::function<std::string(int)> tilde;  // empty result: derive mechanically
    std::function<void(CatalogEntry&, int)> fill;
};

std::vector<TildeImage> scaled(const std::vector<std::tuple<std::string, int, std::string>>& v) {
    std::vector<TildeImage> out;
    for (const auto& [g, s, e] : v) out.push_back({g, s, e});
    return out;
}

// Indexed helpers for the Heisenberg families.
template <typename F>
void for_index(int n, F f) {
    for (int i = 1; i <= n; ++i) f(std::to_string(i));
}

const std::vector<Recipe>& recipes() {
    static const std::vector<Recipe> r = {
        {"Uq_sl2_hat", false, [](int) { return std::string(kUqSl2Hat); }, [](int) { return std::string(kUqSl2Tilde); },
         [](CatalogEntry& e, int) {
             e.tilde_name = "Uq_sl2_tilde";
             e.tilde_images = scaled({{"Fd", 1, "F"}, {"K", 0, "K"}, {"Kinv", 0, "Kinv"}, {"Gammad", 1, "Gamma"}, {"Ed", 1, "E"}, {"Hd", 1, "H"}});
             e.excluded = {"E", "F", "H", "Gamma"};
             e.double_tilde_images = {{"Fd", "F"}, {"K", "H"}, {"Kinv", "H - q^-1*(q+1)*Gamma"}, {"Gammad", "Gamma"}, {"Ed", "E"}, {"Hd", "H"}};
             e.hat_from_double_tilde = {{"F", "dt_Fd"}, {"H", "dt_Hd"}, {"Gamma", "dt_Gammad"}, {"E", "dt_Ed"},
                                        {"K", "1 + (q-1)*dt_K"}, {"Kinv", "1 + (q-1)*dt_Kinv"}};
             e.limit_map = GeneratorMap{"F_aSL2star",
                                        {{"Fd", "zinv*y"}, {"K", "z^2"}, {"Kinv", "zinv^2"}, {"Gammad", "1/2*z^2 - 1/2*zinv^2"}, {"Ed", "x*z"}, {"Hd", "z^2 - 1"}},
                                        true};
         }},
        {"Uq_sl2_hat_sc", false, [](int) { return std::string(kUqSl2HatSc); }, [](int) { return std::string(kUqSl2ScTilde); },
         [](CatalogEntry& e, int) {
             e.tilde_name = "Uq_sl2_sc_tilde";
             e.tilde_images = scaled({{"Fd", 1, "F"}, {"L", 0, "L"}, {"Linv", 0, "Linv"}, {"Gammad", 1, "Gamma"}, {"Ed", 1, "E"}});
             e.excluded = {"E", "F", "D", "Gamma"};
             e.double_tilde_images = {{"Fd", "F"}, {"L", "D"}, {"Linv", "-D*Linv"}, {"Gammad", "Gamma"}, {"Ed", "E"}};
             e.hat_from_double_tilde = {{"F", "dt_Fd"}, {"L", "1 + (q-1)*dt_L"}, {"Linv", "1 + (q-1)*dt_Linv"}, {"D", "dt_L"},
                                        {"Gamma", "dt_Gammad"}, {"E", "dt_Ed"}};
             e.limit_map = GeneratorMap{"F_sSL2star",
                                        {{"Fd", "zinv*y"}, {"L", "z"}, {"Linv", "zinv"}, {"Gammad", "1/2*z^2 - 1/2*zinv^2"}, {"Ed", "x*z"}},
                                        false};
         }},
        {"Fq_SL2_hat", false, [](int) { return std::string(kFqSl2Hat); }, [](int) { return std::string(kFqSl2Tilde); },
         [](CatalogEntry& e, int) {
             e.tilde_name = "Fq_SL2_tilde";
             e.tilde_images = scaled({{"F", -1, "c"}, {"Hp", -1, "a - 1"}, {"Hm", -1, "d - 1"}, {"E", -1, "b"}});
             e.limit_map = GeneratorMap{"U_sl2star", {{"F", "f"}, {"Hp", "h"}, {"Hm", "-h"}, {"E", "e"}}, false};
         }},
        {"Fq_SL3_hat", false, [](int) { return fq_sl3_hat(); }, [](int) { return std::string(); },
         [](CatalogEntry& e, int) {
             e.tilde_name = "Fq_SL3_tilde";
             for (int i = 1; i <= 3; ++i)
                 for (int j = 1; j <= 3; ++j)
                     e.tilde_images.push_back({"r" + std::to_string(i) + std::to_string(j), -1, rho(i, j) + (i == j ? " - 1" : "")});
         }},
        {"Uq_e2_s_hat", false, [](int) { return std::string(kUqE2sHat); }, [](int) { return std::string(kUqE2sTilde); },
         [](CatalogEntry& e, int) {
             e.tilde_name = "Uq_e2_s_tilde";
             e.tilde_images = scaled({{"Fc", 1, "(1 + (q-1)*Dp)*F"}, {"Lc", 0, "1 + (q-1)*Dp"}, {"Lcinv", 0, "1 + (q-1)*Dm"}, {"Ec", 1, "E*(1 + (q-1)*Dm)"}});
             e.excluded = {"E", "F", "Dp", "Dm"};
             e.double_tilde_images = {{"Fc", "(1 + (q-1)*Dp)*F"}, {"Lc", "Dp"}, {"Lcinv", "Dm"}, {"Ec", "E*(1 + (q-1)*Dm)"}};
             e.hat_from_double_tilde = {{"F", "(1 + (q-1)*dt_Lcinv)*dt_Fc"}, {"Dp", "dt_Lc"}, {"Dm", "dt_Lcinv"}, {"E", "dt_Ec*(1 + (q-1)*dt_Lc)"}};
             e.limit_map = GeneratorMap{"F_sE2star", {{"Fc", "y"}, {"Lc", "z"}, {"Lcinv", "zinv"}, {"Ec", "x"}}, false};
         }},
        {"Uq_e2_a_hat", false, [](int) { return std::string(kUqE2aHat); }, [](int) { return std::string(kUqE2aTilde); },
         [](CatalogEntry& e, int) {
             e.tilde_name = "Uq_e2_a_tilde";
             e.tilde_images = scaled({{"Fd", 1, "F"}, {"K", 0, "1 + (q-1)*Hp"}, {"Kinv", 0, "1 + (q-1)*Hm"}, {"Ed", 1, "E"}});
             e.excluded = {"E", "F", "Hp", "Hm"};
             e.double_tilde_images = {{"Fd", "F"}, {"K", "Hp"}, {"Kinv", "Hm"}, {"Ed", "E"}};
             e.hat_from_double_tilde = {{"F", "dt_Fd"}, {"Hp", "dt_K"}, {"Hm", "dt_Kinv"}, {"E", "dt_Ed"}};
             e.limit_map = GeneratorMap{"F_aE2star", {{"Fd", "zinv*y"}, {"K", "z^2"}, {"Kinv", "zinv^2"}, {"Ed", "x*z"}}, true};
         }},
        {"Fq_E2_hat", false, [](int) { return std::string(kFqE2Hat); }, [](int) { return std::string(kFqE2Tilde); },
         [](CatalogEntry& e, int) {
             e.tilde_name = "Fq_E2_tilde";
             e.tilde_images = scaled({{"E", -1, "b"}, {"Dp", -1, "a - 1"}, {"Dm", -1, "ainv - 1"}, {"F", -1, "c"}});
             e.limit_map = GeneratorMap{"U_e2star", {{"E", "e"}, {"Dp", "1/2*h"}, {"Dm", "-1/2*h"}, {"F", "f"}}, false};
         }},
        {"Fq_aE2_hat", false, [](int) { return std::string(kFqAE2Hat); }, [](int) { return std::string(kFqAE2Tilde); },
         [](CatalogEntry& e, int) {
             e.tilde_name = "Fq_aE2_tilde";
             e.tilde_images = scaled({{"Ep", -1, "beta"}, {"Hp", -1, "alpha - 1"}, {"Hm", -1, "alphainv - 1"}, {"Fp", -1, "gamma"}});
             e.limit_map = GeneratorMap{"U_e2star", {{"Ep", "e"}, {"Hp", "h"}, {"Hm", "-h"}, {"Fp", "f"}}, false};
         }},
        {"Uq_hn_s_hat", true, uq_hn_s_hat, uq_hn_s_tilde,
         [](CatalogEntry& e, int n) {
             e.tilde_name = "Uq_hn_s_tilde(" + std::to_string(n) + ")";
             GeneratorMap m{"F_sHnstar(" + std::to_string(n) + ")", {}, false};
             for_index(n, [&](const std::string& i) {
                 e.tilde_images.push_back({"Fd" + i, 1, "F" + i});
                 e.excluded.push_back("F" + i);
                 e.double_tilde_images.push_back({"Fd" + i, "F" + i});
                 e.hat_from_double_tilde.push_back({"F" + i, "dt_Fd" + i});
                 m.images.push_back({"Fd" + i, "gammainv*beta" + i});
             });
             for (const TildeImage& t : scaled({{"L", 0, "L"}, {"Linv", 0, "Linv"}, {"Dd", 1, "D"}, {"Gammad", 1, "Gamma"}})) e.tilde_images.push_back(t);
             e.excluded.push_back("D");
             e.excluded.push_back("Gamma");
             for (auto p : std::vector<std::pair<std::string, std::string>>{{"L", "D"}, {"Linv", "-D*Linv"}, {"Dd", "D"}, {"Gammad", "Gamma"}})
                 e.double_tilde_images.push_back(p);
             for (auto p : std::vector<std::pair<std::string, std::string>>{
                      {"L", "1 + (q-1)*dt_L"}, {"Linv", "1 + (q-1)*dt_Linv"}, {"D", "dt_Dd"}, {"Gamma", "dt_Gammad"}})
                 e.hat_from_double_tilde.push_back(p);
             for (auto p : std::vector<std::pair<std::string, std::string>>{
                      {"L", "gamma"}, {"Linv", "gammainv"}, {"Dd", "gamma - 1"}, {"Gammad", "1/2*gamma^2 - 1/2*gammainv^2"}})
                 m.images.push_back(p);
             for_index(n, [&](const std::string& i) {
                 e.tilde_images.push_back({"Ed" + i, 1, "E" + i});
                 e.excluded.push_back("E" + i);
                 e.double_tilde_images.push_back({"Ed" + i, "E" + i});
                 e.hat_from_double_tilde.push_back({"E" + i, "dt_Ed" + i});
                 m.images.push_back({"Ed" + i, "alpha" + i + "*gamma"});
             });
             e.limit_map = m;
         }},
        {"Uq_hn_a_hat", true, uq_hn_a_hat, uq_hn_a_tilde,
         [](CatalogEntry& e, int n) {
             e.tilde_name = "Uq_hn_a_tilde(" + std::to_string(n) + ")";
             GeneratorMap m{"F_aHnstar(" + std::to_string(n) + ")", {}, true};
             for_index(n, [&](const std::string& i) {
                 e.tilde_images.push_back({"Fd" + i, 1, "F" + i});
                 e.excluded.push_back("F" + i);
                 e.double_tilde_images.push_back({"Fd" + i, "F" + i});
                 e.hat_from_double_tilde.push_back({"F" + i, "dt_Fd" + i});
                 m.images.push_back({"Fd" + i, "gammainv*beta" + i});
             });
             for (const TildeImage& t : scaled({{"K", 0, "K"}, {"Kinv", 0, "Kinv"}, {"Hd", 1, "H"}, {"Gammad", 1, "Gamma"}})) e.tilde_images.push_back(t);
             e.excluded.push_back("H");
             e.excluded.push_back("Gamma");
             for (auto p : std::vector<std::pair<std::string, std::string>>{{"K", "H"}, {"Kinv", "-H*Kinv"}, {"Hd", "H"}, {"Gammad", "Gamma"}})
                 e.double_tilde_images.push_back(p);
             for (auto p : std::vector<std::pair<std::string, std::string>>{
                      {"K", "1 + (q-1)*dt_K"}, {"Kinv", "1 + (q-1)*dt_Kinv"}, {"H", "dt_Hd"}, {"Gamma", "dt_Gammad"}})
                 e.hat_from_double_tilde.push_back(p);
             for (auto p : std::vector<std::pair<std::string, std::string>>{
                      {"K", "gamma^2"}, {"Kinv", "gammainv^2"}, {"Hd", "gamma^2 - 1"}, {"Gammad", "1/2*gamma^2 - 1/2*gammainv^2"}})
                 m.images.push_back(p);
             for_index(n, [&](const std::string& i) {
                 e.tilde_images.push_back({"Ed" + i, 1, "E" + i});
                 e.excluded.push_back("E" + i);
                 e.double_tilde_images.push_back({"Ed" + i, "E" + i});
                 e.hat_from_double_tilde.push_back({"E" + i, "dt_Ed" + i});
                 m.images.push_back({"Ed" + i, "alpha" + i + "*gamma"});
             });
             e.limit_map = m;
         }},
        {"Fq_Hn_hat", true, [](int n) { return fq_hn_text(n, false); }, [](int n) { return fq_hn_text(n, true); },
         [](CatalogEntry& e, int n) {
             e.tilde_name = "Fq_Hn_tilde(" + std::to_string(n) + ")";
             GeneratorMap m{"U_hnstar(" + std::to_string(n) + ")", {}, false};
             for_index(n, [&](const std::string& i) {
                 e.tilde_images.push_back({"E" + i, -1, "a" + i});
                 m.images.push_back({"E" + i, "e" + i});
             });
             e.tilde_images.push_back({"H", -1, "c"});
             m.images.push_back({"H", "h"});
             for_index(n, [&](const std::string& i) {
                 e.tilde_images.push_back({"F" + i, -1, "b" + i});
                 m.images.push_back({"F" + i, "f" + i});
             });
             e.limit_map = m;
         }},
    };
    return r;
}

const Recipe* find_recipe(const std::string& family) {
    for (const Recipe& r : recipes())
        if (r.family == family) return &r;
    return nullptr;
}

int checked_parameter(const std::string& name, int n, bool parameterized) {
    if (!parameterized) {
        if (n != 0) throw BadParameter("catalog entry " + name + " takes no parameter");
        return 0;
    }
    if (n == 0) n = 1;
    if (n < 1 || n > 4) throw BadParameter("family parameter must satisfy 1 <= n <= 4: " + name);
    return n;
}

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

void verify_loaded(const Presentation& p) {
    Report h = check_hopf(p, 0);
    if (!h.ok()) {
        for (const CheckEntry& e : h.entries)
            if (!e.passed) throw HopfCheckFailed(p.name + ": " + e.name);
    }
    Report o = overlap_check(p, 0);
    if (!o.ok()) throw VerificationFailed(p.name + ": overlap check failed");
}

}  // namespace

std::pair<std::string, int> split_family(const std::string& name) {
    size_t open = name.find('(');
    if (open == std::string::npos) return {name, 0};
    if (name.back() != ')') throw UnknownEntry("unknown catalog entry: " + name);
    std::string arg = name.substr(open + 1, name.size() - open - 2);
    if (arg.empty() || arg.find_first_not_of("-0123456789") != std::string::npos)
        throw BadParameter("family parameter must be an integer: " + name);
    int n = 0;
    try {
        n = std::stoi(arg);
    } catch (const std::exception&) {
        throw BadParameter("family parameter out of range: " + name);
    }
    if (n == 0) throw BadParameter("family parameter must satisfy 1 <= n <= 4: " + name);
    return {name.substr(0, open), n};
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const Recipe& r : recipes()) out.push_back(r.family + (r.parameterized ? "(n)" : ""));
    return out;
}

std::vector<std::string> classical_names() {
    return {"F_aSL2star", "F_sSL2star", "U_sl2star", "F_sE2star", "F_aE2star", "U_e2star", "F_sHnstar(n)", "F_aHnstar(n)", "U_hnstar(n)"};
}

bool is_classical_name(const std::string& name) {
    std::string family = name.substr(0, name.find('('));
    for (const std::string& c : classical_names())
        if (c.substr(0, c.find('(')) == family) return true;
    return false;
}

const CatalogEntry& catalog_get(const std::string& name) {
    auto [family, n] = split_family(name);
    const Recipe* r = find_recipe(family);
    if (!r) throw UnknownEntry("unknown catalog entry: " + name);
    n = checked_parameter(name, n, r->parameterized);
    std::string key = family + (r->parameterized ? "(" + std::to_string(n) + ")" : "");
    static std::map<std::string, std::unique_ptr<CatalogEntry>> loaded;
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = loaded.find(key);
    if (it != loaded.end()) return *it->second;
    auto e = std::make_unique<CatalogEntry>();
    e->name = key;
    e->family = family;
    e->n = n;
    e->hat = parse_presentation_file(r->hat(n), false);
    verify_loaded(e->hat);
    e->tilde_text = r->tilde(n);
    r->fill(*e, n);
    return *loaded.emplace(key, std::move(e)).first->second;
}

const Presentation& catalog_classical(const std::string& name) {
    auto [family, n] = split_family(name);
    static const std::map<std::string, std::pair<bool, std::function<std::string(int)>>> table = {
        {"F_sSL2star", {false, [](int) { return std::string(kFsSl2Star); }}},
        {"F_aSL2star", {false, [](int) { return std::string(kFsSl2Star); }}},
        {"U_sl2star", {false, [](int) { return std::string(kUSl2Star); }}},
        {"F_sE2star", {false, [](int) { return std::string(kFsE2Star); }}},
        {"F_aE2star", {false, [](int) { return std::string(kFsE2Star); }}},
        {"U_e2star", {false, [](int) { return std::string(kUE2Star); }}},
        {"F_sHnstar", {true, [](int k) { return f_s_hn_star(k, "F_sHnstar"); }}},
        {"F_aHnstar", {true, [](int k) { return f_s_hn_star(k, "F_aHnstar"); }}},
        {"U_hnstar", {true, u_hn_star}},
    };
    auto t = table.find(family);
    if (t == table.end()) throw UnknownEntry("unknown classical target: " + name);
    n = checked_parameter(name, n, t->second.first);
    std::string key = family + (t->second.first ? "(" + std::to_string(n) + ")" : "");
    static std::map<std::string, std::unique_ptr<Presentation>> loaded;
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = loaded.find(key);
    if (it != loaded.end()) return *it->second;
    auto p = std::make_unique<Presentation>(parse_presentation_file(t->second.second(n), false));
    // The adjoint targets are even-degree subalgebras presented through their simply connected ambient.
    p->name = key;
    verify_loaded(*p);
    return *loaded.emplace(key, std::move(p)).first->second;
}

}  // namespace qdual
