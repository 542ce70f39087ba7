#pragma once
// generated by derive_oracles.py, do not edit

#include <complex>
#include <vector>

namespace oracle {

inline const std::vector<std::complex<double>> expcos_c{
    {3.7182818284590452354, 0.0},
    {5.0e-1, 0.0},
    {2.5e-1, 0.0},
    {8.3333333333333333333e-2, 0.0},
    {2.0833333333333333333e-2, 0.0},
    {4.1666666666666666667e-3, 0.0},
    {6.9444444444444444444e-4, 0.0},
    {9.9206349206349206349e-5, 0.0}};

inline const std::vector<std::complex<double>> expcos_alpha{
    {1.0, 0.0},
    {-1.3447071068499756037e-1, 0.0},
    {-5.0058153464557973451e-2, 0.0},
    {-7.2405708791443890675e-3, 0.0},
    {1.561082930983629009e-3, 0.0},
    {1.00705668934282347e-3, 0.0},
    {1.713626709259352159e-4, 0.0},
    {-2.7544830700134386366e-5, 0.0},
    {-2.0928246437010826407e-5, 0.0},
    {-3.8941169335226454687e-6, 0.0},
    {4.7715455167954083037e-7, 0.0},
    {4.3257400146431969937e-7, 0.0},
    {8.7480141103647384295e-8, 0.0}};

inline const std::vector<std::complex<double>> expcos_h{
    {2.3362653752526720608e+1, 0.0},
    {2.2940201555715733759e+1, 0.0},
    {2.2882717569026874894e+1, 0.0},
    {2.2881517922726876156e+1, 0.0},
    {2.288146216092721865e+1, 0.0},
    {2.2881438955390892294e+1, 0.0},
    {2.2881438283473662232e+1, 0.0},
    {2.2881438266113110044e+1, 0.0},
    {2.28814382560912346e+1, 0.0},
    {2.2881438255744257113e+1, 0.0},
    {2.2881438255739047548e+1, 0.0},
    {2.2881438255734765968e+1, 0.0}};

inline const std::vector<std::complex<double>> trig_alpha{
    {1.0, 0.0},
    {-2.5e-1, 0.0},
    {6.6666666666666666667e-2, 0.0},
    {-1.7857142857142857143e-2, 0.0},
    {4.7846889952153110048e-3, 0.0},
    {-1.2820512820512820513e-3, 0.0},
    {3.4352456200618344212e-4, 0.0},
    {-9.2047128129602356406e-5, 0.0},
    {2.4663953631767172278e-5, 0.0},
    {-6.6086864574797113326e-6, 0.0},
    {1.7707921993062036163e-6, 0.0},
    {-4.7448233976731386058e-7, 0.0},
    {1.2713715976347911346e-7, 0.0}};

inline const std::vector<std::complex<double>> trig_h{
    {6.2831853071795864769, 0.0},
    {5.8904862254808623221, 0.0},
    {5.8643062867009473785, 0.0},
    {5.8624362910738105968, 0.0},
    {5.8623020808613366651, 0.0},
    {5.8622924452563385366, 0.0},
    {5.8622917534523383275, 0.0},
    {5.8622917037830525982, 0.0},
    {5.8622917002169583632, 0.0},
    {5.8622916999609243168, 0.0},
    {5.8622916999425418993, 0.0},
    {5.8622916999412221011, 0.0}};

inline const std::vector<std::complex<double>> expcos_P3{
    {-7.2405708791443890675e-3, 0.0},
    {-4.9133247609081756636e-2, 0.0},
    {-1.2737690560480055758e-1, 0.0},
    {1.0, 0.0}};

inline const std::vector<std::complex<double>> expcos_t11_alpha_left{
    {1.0, 0.0},
    {-1.3938553437407221762e-1, 0.0},
    {-5.0772730199641849001e-2, 0.0},
    {-7.079404628962975893e-3, 0.0},
    {1.6626404313832051589e-3, 0.0},
    {1.0240517121994741539e-3, 0.0},
    {1.6850289968864420849e-4, 0.0},
    {-2.9657044590975540491e-5, 0.0},
    {-2.1315199897946746484e-5, 0.0},
    {-3.8442240618137060284e-6, 0.0}};

inline const std::vector<std::complex<double>> expcos_t11_alpha_right{
    {1.0, 0.0},
    {-2.3195637984621710756e-1, 0.0},
    {-3.1762743235790796371e-2, 0.0},
    {-3.0684743020220727931e-3, 0.0},
    {2.0612875749231679398e-3, 0.0},
    {8.2244805840289542172e-4, 0.0},
    {7.9473139567207150328e-5, 0.0},
    {-3.9932198023792338603e-5, 0.0},
    {-1.7477751524961166577e-5, 0.0},
    {-1.9635200082017879098e-6, 0.0}};

inline const std::vector<std::complex<double>> trig_t11_alpha_left{
    {1.0, 0.0},
    {-2.439024390243902439e-1, 0.0},
    {6.4913988964621876014e-2, 0.0},
    {-1.7385206927425453681e-2, 0.0},
    {4.6581897059791416746e-3, 0.0},
    {-1.2481550446913193953e-3, 0.0},
    {3.3444207613131167634e-4, 0.0},
    {-8.9613483057742117629e-5, 0.0},
    {2.4011860394010963246e-5, 0.0},
    {-6.4339586009160326947e-6, 0.0}};

inline const std::vector<std::complex<double>> trig_t11_alpha_right{
    {1.0, 0.0},
    {-3.4268292682926829268e-1, 0.0},
    {9.6159796602834577518e-2, 0.0},
    {-2.5918982158914313144e-2, 0.0},
    {6.9488724848743566223e-3, 0.0},
    {-1.8620230697573689609e-3, 0.0},
    {4.9892887170998858693e-4, 0.0},
    {-1.3368760630458657252e-4, 0.0},
    {3.5821486361446526709e-5, 0.0},
    {-9.5983383443418232728e-6, 0.0}};

inline const std::vector<std::complex<double>> expcos_tau{
    {2.3362653752526720608e+1, 0.0},
    {5.3594398595936150126e+2, 0.0},
    {1.2263854863526574183e+4, 0.0},
    {2.8061561486150447497e+5, 0.0},
    {6.4208955732188403163e+6, 0.0},
    {1.4691933009754650615e+8, 0.0}};

inline const std::vector<std::complex<double>> expcos_tau_t{
    {2.3435697488329362684e+1, -4.2786533333191539266e-2},
    {5.3746364712246627757e+2, -9.5472830263289329186e-1},
    {1.229848633859716601e+4, -2.1814193836283831618e+1},
    {2.8140809159166379844e+5, -4.9918451697035343767e+2},
    {6.4390282234274131989e+6, -1.1421984680425835666e+4},
    {1.4733423038660658323e+8, -2.6135125286274132241e+5}};

inline const std::vector<std::complex<double>> expcos_cd_l6{
    {1.6343977806624290764e-1, 3.7457682520167452773e-2}};

inline const std::vector<std::complex<double>> expcos_C1_z15{
    {1.0637517824756899688, 0.0},
    {1.4793340848129925864, 0.0},
    {5.0375938155014645982e-1, 0.0},
    {2.177641889828409509, 0.0},
    {3.287282880865423627e-1, 0.0}};

inline const std::vector<std::complex<double>> expcos_C1_z06{
    {2.8133900474539421367, 0.0},
    {1.3338343584559707333, 0.0},
    {4.3341386028973843412, 0.0},
    {6.3877708056901556394e-1, 0.0},
    {7.2168705916484639906, 0.0}};

} // namespace oracle
