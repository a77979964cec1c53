"""Frozen Monte Carlo moment tables; regenerate with tools/gen_unitroot_moments.py."""

# tau moments under the unit-root null: spec -> lag -> {T: (mean, variance)}
IPS_TAU_MOMENTS: dict[str, dict[int, dict[int, tuple[float, float]]]] = {
    'n': {
        0: {6: (-0.305249, 1.530057), 7: (-0.326132, 1.333442), 8: (-0.338007, 1.237173), 9: (-0.3473, 1.185112), 10: (-0.356616, 1.146728), 12: (-0.365295, 1.107153), 15: (-0.381655, 1.071109), 20: (-0.389018, 1.031323), 25: (-0.396102, 1.01594), 30: (-0.399261, 1.007026), 40: (-0.406415, 0.995564), 50: (-0.413307, 0.986167), 60: (-0.412816, 0.985452), 70: (-0.406546, 0.977425), 100: (-0.414358, 0.971004), 150: (-0.41699, 0.970461), 200: (-0.422823, 0.970902), 400: (-0.427625, 0.963301)},
        1: {7: (-0.40119, 2.165306), 8: (-0.387109, 1.501743), 9: (-0.385297, 1.316653), 10: (-0.388391, 1.228134), 12: (-0.387515, 1.132725), 15: (-0.396388, 1.077832), 20: (-0.40074, 1.036337), 25: (-0.404464, 1.018162), 30: (-0.405709, 1.005708), 40: (-0.410311, 0.993245), 50: (-0.415726, 0.984922), 60: (-0.414492, 0.987336), 70: (-0.407744, 0.9778), 100: (-0.415994, 0.973074), 150: (-0.417463, 0.970975), 200: (-0.42406, 0.969586), 400: (-0.42826, 0.963024)},
        2: {9: (-0.235934, 2.115362), 10: (-0.249494, 1.520451), 12: (-0.269029, 1.240433), 15: (-0.298593, 1.116193), 20: (-0.325587, 1.048373), 25: (-0.344292, 1.022741), 30: (-0.356076, 1.01089), 40: (-0.372219, 0.994648), 50: (-0.384308, 0.988906), 60: (-0.388824, 0.989208), 70: (-0.385168, 0.980609), 100: (-0.400146, 0.973557), 150: (-0.407497, 0.97252), 200: (-0.417095, 0.970452), 400: (-0.424316, 0.963104)},
        3: {12: (-0.315665, 1.5369), 15: (-0.323566, 1.189761), 20: (-0.340554, 1.066521), 25: (-0.356177, 1.023329), 30: (-0.362839, 1.015268), 40: (-0.377134, 0.992246), 50: (-0.387461, 0.98786), 60: (-0.390916, 0.989307), 70: (-0.388267, 0.982285), 100: (-0.401883, 0.972158), 150: (-0.408586, 0.971251), 200: (-0.417544, 0.970846), 400: (-0.424175, 0.962542)},
        4: {15: (-0.240751, 1.362139), 20: (-0.27335, 1.105551), 25: (-0.300143, 1.042598), 30: (-0.315345, 1.022308), 40: (-0.340412, 0.994856), 50: (-0.357457, 0.987498), 60: (-0.365089, 0.986504), 70: (-0.367815, 0.982026), 100: (-0.386761, 0.972996), 150: (-0.399395, 0.97099), 200: (-0.410166, 0.970152), 400: (-0.42012, 0.962454)},
        5: {15: (-0.291995, 2.186928), 20: (-0.2953, 1.168486), 25: (-0.313208, 1.061996), 30: (-0.32516, 1.028457), 40: (-0.347449, 0.99416), 50: (-0.361421, 0.986905), 60: (-0.368982, 0.985751), 70: (-0.370037, 0.984646), 100: (-0.389058, 0.97227), 150: (-0.40105, 0.973678), 200: (-0.410567, 0.969709), 400: (-0.420483, 0.963108)},
        6: {20: (-0.230799, 1.286167), 25: (-0.262501, 1.09931), 30: (-0.28013, 1.045614), 40: (-0.311173, 1.001085), 50: (-0.334128, 0.996437), 60: (-0.345572, 0.987212), 70: (-0.348324, 0.986921), 100: (-0.373698, 0.972606), 150: (-0.390443, 0.976115), 200: (-0.40288, 0.969345), 400: (-0.417072, 0.963234)},
        7: {20: (-0.257605, 1.615042), 25: (-0.279276, 1.155717), 30: (-0.291208, 1.069805), 40: (-0.319923, 1.004955), 50: (-0.338085, 0.996509), 60: (-0.349845, 0.988663), 70: (-0.351368, 0.986891), 100: (-0.375776, 0.971822), 150: (-0.391464, 0.975454), 200: (-0.403132, 0.969205), 400: (-0.417137, 0.963218)},
        8: {25: (-0.227291, 1.234409), 30: (-0.248955, 1.1033), 40: (-0.287142, 1.016848), 50: (-0.309261, 1.004114), 60: (-0.32627, 0.992459), 70: (-0.331886, 0.991952), 100: (-0.362047, 0.972281), 150: (-0.381879, 0.974021), 200: (-0.395507, 0.9691), 400: (-0.413891, 0.963869)},
    },
    'c': {
        0: {6: (-1.561866, 2.721627), 7: (-1.526926, 1.752115), 8: (-1.51415, 1.404806), 9: (-1.509323, 1.246961), 10: (-1.510159, 1.136119), 12: (-1.506448, 1.022397), 15: (-1.513849, 0.936143), 20: (-1.516031, 0.856683), 25: (-1.522159, 0.821437), 30: (-1.522759, 0.803188), 40: (-1.526186, 0.773807), 50: (-1.522925, 0.764551), 60: (-1.527101, 0.747316), 70: (-1.529577, 0.742456), 100: (-1.527459, 0.73987), 150: (-1.531701, 0.720793), 200: (-1.536107, 0.718349), 400: (-1.531803, 0.709996)},
        1: {8: (-1.559515, 3.057412), 9: (-1.510446, 1.970626), 10: (-1.49942, 1.570675), 12: (-1.491017, 1.263934), 15: (-1.498085, 1.070159), 20: (-1.506174, 0.937347), 25: (-1.514072, 0.877775), 30: (-1.514799, 0.84759), 40: (-1.519404, 0.80678), 50: (-1.518721, 0.787789), 60: (-1.522899, 0.768291), 70: (-1.526326, 0.759644), 100: (-1.525322, 0.750523), 150: (-1.530414, 0.729499), 200: (-1.534801, 0.723626), 400: (-1.531759, 0.711145)},
        2: {10: (-1.315012, 2.947487), 12: (-1.310553, 1.601039), 15: (-1.354224, 1.219635), 20: (-1.403799, 1.024558), 25: (-1.43421, 0.93963), 30: (-1.450689, 0.895984), 40: (-1.470759, 0.83534), 50: (-1.482943, 0.811393), 60: (-1.49317, 0.789063), 70: (-1.501036, 0.774424), 100: (-1.507508, 0.763066), 150: (-1.518084, 0.736971), 200: (-1.526747, 0.729596), 400: (-1.527413, 0.713899)},
        3: {12: (-1.32753, 3.141093), 15: (-1.31794, 1.516586), 20: (-1.373892, 1.139705), 25: (-1.414288, 1.012533), 30: (-1.435281, 0.946658), 40: (-1.459616, 0.869212), 50: (-1.47742, 0.839361), 60: (-1.489422, 0.809257), 70: (-1.497028, 0.790973), 100: (-1.505456, 0.774154), 150: (-1.515667, 0.747041), 200: (-1.526091, 0.733997), 400: (-1.527097, 0.716064)},
        4: {15: (-1.178518, 2.065484), 20: (-1.260788, 1.280535), 25: (-1.325782, 1.092513), 30: (-1.363718, 1.006534), 40: (-1.409143, 0.908357), 50: (-1.43791, 0.863528), 60: (-1.457087, 0.82979), 70: (-1.469714, 0.810426), 100: (-1.48813, 0.787062), 150: (-1.504122, 0.756264), 200: (-1.517181, 0.740296), 400: (-1.52323, 0.717104)},
        5: {20: (-1.224662, 1.496044), 25: (-1.297483, 1.200588), 30: (-1.341408, 1.078772), 40: (-1.397259, 0.950198), 50: (-1.42865, 0.893932), 60: (-1.451212, 0.853303), 70: (-1.465411, 0.827692), 100: (-1.483724, 0.798447), 150: (-1.501954, 0.762313), 200: (-1.515551, 0.74714), 400: (-1.522509, 0.71885)},
        6: {20: (-1.113642, 1.837475), 25: (-1.200744, 1.321562), 30: (-1.264507, 1.154093), 40: (-1.34391, 0.999297), 50: (-1.3873, 0.925753), 60: (-1.418812, 0.877748), 70: (-1.438405, 0.846851), 100: (-1.464552, 0.809476), 150: (-1.49101, 0.770357), 200: (-1.506214, 0.752237), 400: (-1.517822, 0.722002)},
        7: {20: (-1.11884, 3.2297), 25: (-1.166693, 1.489238), 30: (-1.234938, 1.245414), 40: (-1.32477, 1.048432), 50: (-1.376678, 0.95789), 60: (-1.411403, 0.905288), 70: (-1.432472, 0.86296), 100: (-1.45974, 0.823069), 150: (-1.488709, 0.77737), 200: (-1.50423, 0.756719), 400: (-1.516813, 0.723743)},
        8: {25: (-1.069249, 1.709796), 30: (-1.152095, 1.339901), 40: (-1.268609, 1.104724), 50: (-1.332771, 0.997464), 60: (-1.376836, 0.93573), 70: (-1.404813, 0.887985), 100: (-1.439887, 0.832511), 150: (-1.475332, 0.783586), 200: (-1.494944, 0.760002), 400: (-1.511583, 0.726404)},
    },
    'ct': {
        0: {7: (-2.237602, 3.123371), 8: (-2.186729, 1.877311), 9: (-2.16843, 1.462182), 10: (-2.164298, 1.252877), 12: (-2.160928, 1.04391), 15: (-2.164071, 0.894041), 20: (-2.167247, 0.78217), 25: (-2.169294, 0.727501), 30: (-2.172646, 0.694831), 40: (-2.177908, 0.657864), 50: (-2.176123, 0.637752), 60: (-2.173899, 0.623789), 70: (-2.179658, 0.619618), 100: (-2.179697, 0.593955), 150: (-2.176527, 0.584054), 200: (-2.185966, 0.576193), 400: (-2.180712, 0.56853)},
        1: {9: (-2.281999, 4.191093), 10: (-2.205448, 2.366262), 12: (-2.166796, 1.460302), 15: (-2.163597, 1.097673), 20: (-2.168504, 0.883559), 25: (-2.171066, 0.792048), 30: (-2.17261, 0.741671), 40: (-2.179022, 0.690024), 50: (-2.175808, 0.659377), 60: (-2.176446, 0.643111), 70: (-2.179438, 0.63109), 100: (-2.181233, 0.604955), 150: (-2.177603, 0.592018), 200: (-2.186741, 0.582729), 400: (-2.181482, 0.570413)},
        2: {12: (-1.899019, 2.102263), 15: (-1.949251, 1.281228), 20: (-2.02159, 0.966613), 25: (-2.064247, 0.843251), 30: (-2.085321, 0.774741), 40: (-2.116121, 0.709858), 50: (-2.128442, 0.676355), 60: (-2.137552, 0.653958), 70: (-2.144787, 0.642917), 100: (-2.157149, 0.610727), 150: (-2.163854, 0.594156), 200: (-2.174976, 0.58406), 400: (-2.176412, 0.572495)},
        3: {15: (-1.920551, 1.913083), 20: (-1.988653, 1.164347), 25: (-2.043846, 0.950912), 30: (-2.074398, 0.847858), 40: (-2.110251, 0.752177), 50: (-2.125017, 0.706801), 60: (-2.13655, 0.676355), 70: (-2.141413, 0.661866), 100: (-2.158189, 0.621934), 150: (-2.164117, 0.601943), 200: (-2.174823, 0.590243), 400: (-2.175801, 0.574576)},
        4: {15: (-1.744839, 3.814192), 20: (-1.818666, 1.347445), 25: (-1.91454, 1.048031), 30: (-1.97354, 0.911646), 40: (-2.041092, 0.788041), 50: (-2.074774, 0.731788), 60: (-2.092986, 0.691224), 70: (-2.107728, 0.673653), 100: (-2.134596, 0.628893), 150: (-2.148759, 0.604518), 200: (-2.165081, 0.593396), 400: (-2.170539, 0.575448)},
        5: {20: (-1.776398, 1.764417), 25: (-1.879356, 1.225627), 30: (-1.945599, 1.018435), 40: (-2.029308, 0.845154), 50: (-2.066546, 0.772013), 60: (-2.087177, 0.719814), 70: (-2.104404, 0.69458), 100: (-2.133372, 0.643345), 150: (-2.149593, 0.614141), 200: (-2.164587, 0.597411), 400: (-2.170758, 0.57768)},
        6: {20: (-1.620703, 2.439392), 25: (-1.739231, 1.373957), 30: (-1.833143, 1.117262), 40: (-1.953382, 0.895386), 50: (-2.009768, 0.802835), 60: (-2.042115, 0.743799), 70: (-2.068587, 0.713066), 100: (-2.109473, 0.652593), 150: (-2.134105, 0.620387), 200: (-2.154067, 0.602587), 400: (-2.165999, 0.580321)},
        7: {25: (-1.698138, 1.675338), 30: (-1.797836, 1.263841), 40: (-1.931548, 0.970097), 50: (-1.995369, 0.846218), 60: (-2.032922, 0.777023), 70: (-2.06286, 0.742187), 100: (-2.105725, 0.667788), 150: (-2.133293, 0.629341), 200: (-2.153178, 0.608133), 400: (-2.166666, 0.583274)},
        8: {25: (-1.559046, 2.05392), 30: (-1.680548, 1.398411), 40: (-1.843271, 1.031722), 50: (-1.93237, 0.891228), 60: (-1.984213, 0.806639), 70: (-2.022347, 0.762166), 100: (-2.079502, 0.679968), 150: (-2.117999, 0.63572), 200: (-2.140607, 0.611528), 400: (-2.160727, 0.586642)},
    },
}

# Z-tau moments under the null: spec -> {T: (mean, variance)}
PP_ZT_MOMENTS: dict[str, dict[int, tuple[float, float]]] = {
    'n': {10: (-0.310418, 1.456217), 12: (-0.330487, 1.346227), 15: (-0.35324, 1.256046), 20: (-0.368302, 1.190363), 25: (-0.383182, 1.145953), 30: (-0.385263, 1.163992), 40: (-0.391442, 1.118701), 50: (-0.401547, 1.094334), 60: (-0.403681, 1.079794), 70: (-0.409118, 1.053809), 100: (-0.405755, 1.052358), 150: (-0.420612, 1.034065), 200: (-0.422914, 1.009586), 400: (-0.422857, 0.993306)},
    'c': {10: (-1.534953, 1.621277), 12: (-1.537217, 1.304553), 15: (-1.538802, 1.086062), 20: (-1.541432, 0.945808), 25: (-1.542822, 0.886461), 30: (-1.551216, 0.881712), 40: (-1.556046, 0.836091), 50: (-1.553857, 0.813865), 60: (-1.5561, 0.796696), 70: (-1.549974, 0.793142), 100: (-1.556357, 0.774246), 150: (-1.54403, 0.757929), 200: (-1.543195, 0.747706), 400: (-1.545474, 0.738321)},
    'ct': {10: (-2.26098, 2.404459), 12: (-2.209389, 1.524629), 15: (-2.198349, 1.038844), 20: (-2.212047, 0.796858), 25: (-2.22461, 0.715878), 30: (-2.222622, 0.684864), 40: (-2.236909, 0.650017), 50: (-2.241917, 0.635641), 60: (-2.243821, 0.626933), 70: (-2.238975, 0.627152), 100: (-2.242726, 0.617609), 150: (-2.233687, 0.605257), 200: (-2.223848, 0.604671), 400: (-2.213517, 0.59293)},
}

# T -> inf anchors of the two statistics: spec -> (mean, variance)
ASY_TAU_MOMENTS: dict[str, tuple[float, float]] = {'n': (-0.431471, 0.963412), 'c': (-1.536192, 0.698584), 'ct': (-2.183189, 0.559852)}
ASY_ZT_MOMENTS: dict[str, tuple[float, float]] = {'n': (-0.432109, 0.973026), 'c': (-1.538198, 0.725106), 'ct': (-2.20454, 0.586157)}

# tau moments at the Schwarz-selected lag (default lag cap):
# spec -> {T: (mean, variance)}
SEL_TAU_MOMENTS: dict[str, dict[int, tuple[float, float]]] = {
    'n': {6: (-0.305863, 1.507812), 7: (-0.418241, 2.547556), 8: (-0.403898, 1.806278), 9: (-0.347747, 2.525208), 10: (-0.351875, 1.925247), 12: (-0.398472, 1.975021), 15: (-0.379329, 1.704428), 20: (-0.389124, 1.506407), 25: (-0.391266, 1.34885), 30: (-0.398737, 1.156289), 40: (-0.407549, 1.075233), 50: (-0.407354, 1.035573), 60: (-0.414775, 1.015819), 70: (-0.419802, 1.007148), 100: (-0.418589, 0.98585), 150: (-0.416569, 0.979532), 200: (-0.420032, 0.974482), 400: (-0.427276, 0.968977)},
    'c': {6: (-1.554813, 2.607135), 7: (-1.522899, 1.77282), 8: (-1.770096, 3.433702), 9: (-1.689534, 2.064942), 10: (-1.696283, 3.088727), 12: (-1.749099, 3.438105), 15: (-1.65815, 2.218201), 20: (-1.631221, 1.811638), 25: (-1.607828, 1.507527), 30: (-1.576961, 1.059843), 40: (-1.54887, 0.872327), 50: (-1.544906, 0.821721), 60: (-1.53756, 0.796372), 70: (-1.540473, 0.768858), 100: (-1.542783, 0.749198), 150: (-1.534486, 0.734188), 200: (-1.537744, 0.725882), 400: (-1.536507, 0.708528)},
    'ct': {7: (-2.233482, 3.131396), 8: (-2.186722, 1.883511), 9: (-2.606395, 4.249374), 10: (-2.500812, 2.283526), 12: (-2.47714, 2.252436), 15: (-2.49236, 3.449107), 20: (-2.442543, 2.352018), 25: (-2.405729, 1.826473), 30: (-2.35009, 1.11382), 40: (-2.26885, 0.833746), 50: (-2.23981, 0.736231), 60: (-2.219733, 0.693438), 70: (-2.208413, 0.666246), 100: (-2.197692, 0.622026), 150: (-2.189541, 0.595932), 200: (-2.184415, 0.58836), 400: (-2.181386, 0.577487)},
}
ASY_SEL_TAU_MOMENTS: dict[str, tuple[float, float]] = {'n': (-0.427441, 0.963443), 'c': (-1.533344, 0.697102), 'ct': (-2.174728, 0.560031)}

# pooled t-ratio adjustments: spec -> {T~: (mu*, sigma*)}
LLC_ADJUSTMENTS: dict[str, dict[int, tuple[float, float]]] = {
    'n': {4: (0.170261, 7.167937), 5: (0.073721, 2.374851), 6: (0.045709, 1.664534), 8: (0.026452, 1.310635), 10: (0.017366, 1.198552), 15: (0.009668, 1.077667), 20: (0.006829, 1.086445), 25: (0.004857, 1.050722), 30: (0.004449, 1.021405), 40: (0.002969, 1.041529), 50: (0.001648, 1.006535), 70: (0.002546, 1.030585), 100: (0.000938, 0.993411)},
    'c': {5: (-1.242521, 11.456602), 6: (-0.931749, 3.426715), 8: (-0.751619, 1.571009), 10: (-0.679248, 1.176831), 15: (-0.605843, 0.963493), 20: (-0.574875, 0.891993), 25: (-0.557901, 0.847894), 30: (-0.559961, 0.819499), 40: (-0.543393, 0.779364), 50: (-0.534414, 0.779447), 70: (-0.524513, 0.763907), 100: (-0.520005, 0.740041)},
    'ct': {6: (-1.403242, 12.535865), 8: (-0.937112, 2.254786), 10: (-0.802324, 1.438982), 15: (-0.671452, 1.039545), 20: (-0.619674, 0.844234), 25: (-0.59129, 0.783035), 30: (-0.599032, 0.755474), 40: (-0.57139, 0.685687), 50: (-0.555461, 0.63402), 70: (-0.538388, 0.590213), 100: (-0.532778, 0.590688)},
}
