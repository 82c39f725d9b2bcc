// Generated by tools/make_template.py; do not edit by hand.

#include "mvmr/summary_template.hpp"

#include <array>

namespace mvmr {

namespace {

// gamma_1..3, se_x1..3, se_y
constexpr std::array<std::array<double, 7>, 145> kTemplateRows{{
    {-0.01007981, -0.00247137, 0.00278713, 0.00206705, 0.00186035, 0.00227376, 0.00140697},
    {0.0013478, 0.00556201, -0.00245943, 0.00141421, 0.00127279, 0.00155563, 0.00096261},
    {0.0049328, -0.00515947, 0.00639566, 0.00152356, 0.0013712, 0.00167591, 0.00103703},
    {-0.01592959, -0.01942405, 0.0075571, 0.00143005, 0.00128704, 0.00157305, 0.00097339},
    {0.02146795, -0.00445251, -0.0036525, 0.00188434, 0.0016959, 0.00207277, 0.0012826},
    {0.00513989, 0.00740806, 0.00094116, 0.0023506, 0.00211554, 0.00258565, 0.00159997},
    {-0.00332909, -0.00117519, 0.00055328, 0.00144119, 0.00129707, 0.00158531, 0.00098097},
    {0.01247375, -0.0035517, 0.01172154, 0.00156813, 0.00141131, 0.00172494, 0.00106737},
    {0.00259608, 0.00947081, -0.00529402, 0.00141655, 0.00127489, 0.0015582, 0.00096419},
    {-0.00247499, -0.01502368, 0.00030552, 0.00149268, 0.00134341, 0.00164195, 0.00101602},
    {0.00265985, -0.02347598, 0.00620668, 0.00204972, 0.00184475, 0.00225469, 0.00139517},
    {0.01564919, 0.00107786, -0.00361691, 0.00157702, 0.00141932, 0.00173473, 0.00107342},
    {-0.00096124, -0.00329168, 0.00141512, 0.0014779, 0.00133011, 0.00162569, 0.00100596},
    {-0.0013955, -0.00176141, 0.00056074, 0.00144219, 0.00129797, 0.00158641, 0.00098165},
    {-0.02948994, -0.01354925, 0.0153919, 0.00184512, 0.00166061, 0.00202964, 0.00125591},
    {-0.0068612, 0.04322311, -0.0196194, 0.00143978, 0.0012958, 0.00158375, 0.00098001},
    {-0.0001976, 0.00087139, -0.0002123, 0.00165649, 0.00149084, 0.00182214, 0.00112752},
    {0.0001075, -0.00064693, 0.00028678, 0.00142782, 0.00128503, 0.0015706, 0.00097187},
    {-0.00061091, -6.8e-05, 0.00095533, 0.00151903, 0.00136713, 0.00167093, 0.00103395},
    {-0.00321314, -0.00215141, -0.00059294, 0.00217134, 0.00195421, 0.00238848, 0.00147796},
    {0.00455852, 0.00841563, -0.00189807, 0.00141673, 0.00127506, 0.0015584, 0.00096432},
    {-0.00115955, -0.00036648, -0.00068222, 0.0014918, 0.00134262, 0.00164098, 0.00101542},
    {-0.00392149, -0.00567564, 0.00262458, 0.00228147, 0.00205333, 0.00250962, 0.00155292},
    {0.01175781, -0.04118172, 0.00884855, 0.00141769, 0.00127592, 0.00155946, 0.00096497},
    {-0.00740637, -0.03558025, -0.01736517, 0.00142022, 0.00127819, 0.00156224, 0.00096669},
    {-0.00408699, -0.0037071, -0.00019345, 0.00174984, 0.00157485, 0.00192482, 0.00119105},
    {0.00197124, -0.0179317, 0.01277669, 0.00142179, 0.00127961, 0.00156396, 0.00096776},
    {0.00173606, 0.00255278, -0.00099017, 0.00185981, 0.00167383, 0.00204579, 0.00126591},
    {-0.00184974, -0.00443355, 0.00749049, 0.00147131, 0.00132418, 0.00161844, 0.00100147},
    {-0.00070244, 0.00543042, -0.0037066, 0.00269182, 0.00242264, 0.002961, 0.00183223},
    {-0.00531262, -0.00861589, -0.00265526, 0.00178527, 0.00160675, 0.0019638, 0.00121517},
    {-0.03278088, 0.07723019, 0.04189176, 0.00182962, 0.00164666, 0.00201259, 0.00124536},
    {0.00810132, -0.00301475, -0.00321585, 0.00141761, 0.00127585, 0.00155937, 0.00096492},
    {0.00061484, -0.00284094, -0.00258981, 0.00220563, 0.00198507, 0.0024262, 0.0015013},
    {0.00016943, 0.00239159, -0.0041019, 0.00198358, 0.00178522, 0.00218194, 0.00135016},
    {0.0188344, 0.0730177, -0.04341074, 0.00161146, 0.00145032, 0.00177261, 0.00109687},
    {0.00194927, 0.00068448, 0.00026956, 0.00141426, 0.00127284, 0.00155569, 0.00096264},
    {-0.00061851, -0.00028893, 0.00040591, 0.00154922, 0.0013943, 0.00170415, 0.0010545},
    {-0.00473771, 0.02754653, -0.00255808, 0.00265903, 0.00239313, 0.00292493, 0.00180991},
    {-0.00163597, -0.00662845, -0.00019109, 0.00158226, 0.00142404, 0.00174049, 0.00107699},
    {-0.00531545, -0.00742592, 0.00660221, 0.00159037, 0.00143133, 0.00174941, 0.00108251},
    {-0.00336523, -0.01656378, 0.00846858, 0.00257146, 0.00231431, 0.00282861, 0.0017503},
    {-0.01473523, 0.01045555, -0.01040122, 0.0016448, 0.00148032, 0.00180928, 0.00111956},
    {-0.01115995, -0.01431492, -0.00453871, 0.00155988, 0.00140389, 0.00171587, 0.00106176},
    {-0.02157803, 0.05656989, -0.06766728, 0.00172442, 0.00155198, 0.00189686, 0.00117375},
    {0.00528209, 0.0035856, 0.0039318, 0.00179533, 0.0016158, 0.00197486, 0.00122202},
    {0.00558649, -0.00127293, -0.00180555, 0.00144342, 0.00129908, 0.00158777, 0.00098249},
    {0.00122878, 0.00929441, 0.0029635, 0.00149687, 0.00134718, 0.00164656, 0.00101887},
    {-0.00172244, 0.00879274, -0.00945959, 0.00147226, 0.00132503, 0.00161948, 0.00100211},
    {0.00019582, 0.00068939, -0.00029578, 0.00142313, 0.00128082, 0.00156544, 0.00096867},
    {-0.0058614, 0.00560638, 3.519e-05, 0.00147939, 0.00133145, 0.00162733, 0.00100697},
    {-0.00946909, -0.01086417, 0.01629576, 0.00159651, 0.00143686, 0.00175616, 0.00108669},
    {-0.00464694, 0.00421707, -0.00440311, 0.00171148, 0.00154033, 0.00188263, 0.00116494},
    {-0.03596772, -0.04899495, 0.03329392, 0.00180826, 0.00162743, 0.00198908, 0.00123082},
    {-0.0021593, -0.00276696, 0.0027676, 0.00285918, 0.00257326, 0.0031451, 0.00194615},
    {0.01655477, 0.01335372, 0.00373865, 0.00275945, 0.0024835, 0.00303539, 0.00187826},
    {0.00095942, -0.00646064, -0.00402446, 0.00146906, 0.00132216, 0.00161597, 0.00099994},
    {-0.00037346, -0.00162777, 0.00055924, 0.00148419, 0.00133577, 0.00163261, 0.00101024},
    {0.05050319, 0.01506748, 0.01449708, 0.00177253, 0.00159528, 0.00194979, 0.0012065},
    {0.00063369, -0.00086578, -0.00062542, 0.00161019, 0.00144917, 0.00177121, 0.001096},
    {-0.00190866, 0.00733954, -0.00350956, 0.00141576, 0.00127418, 0.00155734, 0.00096366},
    {-0.01002421, -0.00137061, 0.00241745, 0.00141614, 0.00127453, 0.00155776, 0.00096392},
    {0.05055695, 0.07240017, -0.01103402, 0.002157, 0.0019413, 0.00237269, 0.00146819},
    {-0.00274908, -0.00552143, 0.00507215, 0.00144949, 0.00130454, 0.00159443, 0.00098661},
    {-0.00197048, -0.00935887, -0.0023439, 0.00245304, 0.00220773, 0.00269834, 0.0016697},
    {0.00020486, -0.00058984, 0.00011339, 0.00144267, 0.0012984, 0.00158694, 0.00098198},
    {-0.00703219, 0.00567414, 0.00198432, 0.00158264, 0.00142438, 0.0017409, 0.00107725},
    {0.00025618, -0.00015313, 0.00222357, 0.00170336, 0.00153302, 0.00187369, 0.00115941},
    {0.00446854, 0.0173729, -0.00613541, 0.0014592, 0.00131328, 0.00160512, 0.00099323},
    {0.00031614, 0.00081235, -0.00014423, 0.00154297, 0.00138867, 0.00169726, 0.00105024},
    {0.00985863, 0.00507716, 0.00196913, 0.00143827, 0.00129444, 0.00158209, 0.00097898},
    {-0.0007865, 0.00186419, 0.00096085, 0.00143144, 0.0012883, 0.00157458, 0.00097433},
    {-0.00336853, -0.01384817, 0.00272507, 0.00183655, 0.0016529, 0.00202021, 0.00125008},
    {-0.00208754, 0.00010555, 0.00422506, 0.00146277, 0.00131649, 0.00160904, 0.00099565},
    {0.00066386, 0.00341343, -0.00194604, 0.00199051, 0.00179146, 0.00218956, 0.00135487},
    {-0.00083097, -0.00055954, -0.00297957, 0.00158165, 0.00142349, 0.00173982, 0.00107657},
    {-0.01072125, -0.0100543, 0.00873454, 0.00178408, 0.00160567, 0.00196249, 0.00121436},
    {0.00155287, 0.00437448, 0.00298755, 0.0016382, 0.00147438, 0.00180202, 0.00111507},
    {-0.01268883, -0.00964917, -0.0062897, 0.00144404, 0.00129964, 0.00158845, 0.00098291},
    {0.01031922, 0.00330744, -0.00306572, 0.00165138, 0.00148624, 0.00181652, 0.00112404},
    {0.00462423, 0.01094805, 0.00300243, 0.00141439, 0.00127295, 0.00155582, 0.00096272},
    {0.00059987, 0.00461999, -0.00263884, 0.00208192, 0.00187373, 0.00229012, 0.00141709},
    {0.00066446, 0.00042404, -0.00174253, 0.00174218, 0.00156796, 0.0019164, 0.00118584},
    {-1.588e-05, -0.00135828, -0.00034485, 0.00240495, 0.00216445, 0.00264544, 0.00163696},
    {0.02457927, 0.03105472, -0.00860608, 0.00305766, 0.00275189, 0.00336342, 0.00208124},
    {0.00049331, 0.0049599, -0.00085723, 0.00155018, 0.00139516, 0.00170519, 0.00105515},
    {0.01799863, -0.0068882, 0.0006827, 0.0015623, 0.00140607, 0.00171853, 0.0010634},
    {-0.03126547, -0.01681169, 0.00267945, 0.00163765, 0.00147388, 0.00180141, 0.00111469},
    {0.00323764, 0.01231766, 0.00161701, 0.00182398, 0.00164158, 0.00200638, 0.00124152},
    {-0.03705668, 0.04359132, -0.01357311, 0.00295644, 0.0026608, 0.00325209, 0.00201235},
    {0.00291094, -0.01072241, 0.00992619, 0.00229847, 0.00206862, 0.00252831, 0.00156449},
    {0.00534205, -0.04058466, 0.01199955, 0.00153892, 0.00138502, 0.00169281, 0.00104749},
    {0.00076422, -0.00108063, -0.00062689, 0.00197196, 0.00177476, 0.00216916, 0.00134224},
    {0.0049941, 0.00465227, -0.00171276, 0.00192734, 0.00173461, 0.00212007, 0.00131187},
    {-0.00286167, -0.01023771, 3.296e-05, 0.00143499, 0.00129149, 0.00157849, 0.00097675},
    {-0.00596339, -0.04403878, 0.02381078, 0.00149245, 0.0013432, 0.00164169, 0.00101586},
    {-0.00145742, -0.00822427, 0.00161712, 0.0016684, 0.00150156, 0.00183524, 0.00113562},
    {0.00045764, -0.00300796, 0.00075345, 0.00146996, 0.00132296, 0.00161695, 0.00100055},
    {-0.02415905, 0.01571555, 0.00644335, 0.00153825, 0.00138442, 0.00169207, 0.00104703},
    {-0.00158557, -0.01188934, 0.00084914, 0.00236522, 0.0021287, 0.00260174, 0.00160992},
    {0.00236329, 0.00145396, 9.594e-05, 0.0014243, 0.00128187, 0.00156673, 0.00096947},
    {-0.00222857, 0.00032022, 0.0137967, 0.0015715, 0.00141435, 0.00172865, 0.00106966},
    {-0.00160433, -0.00230961, -0.00053867, 0.00175308, 0.00157777, 0.00192839, 0.00119326},
    {0.00212837, 0.003782, 0.00089932, 0.00159102, 0.00143192, 0.00175012, 0.00108295},
    {-0.0057337, -0.00308104, -0.0019106, 0.00168641, 0.00151777, 0.00185505, 0.00114788},
    {-0.00371125, 0.00516051, -0.00139021, 0.00153828, 0.00138445, 0.00169211, 0.00104706},
    {-0.01624573, 0.01625116, -0.01366486, 0.00238782, 0.00214904, 0.0026266, 0.00162531},
    {0.00830685, 0.00300157, -0.00911236, 0.00167933, 0.0015114, 0.00184727, 0.00114306},
    {0.00236286, 0.00245951, -0.00049304, 0.00151381, 0.00136243, 0.0016652, 0.0010304},
    {0.00088668, 0.00686226, -0.00323708, 0.00147781, 0.00133003, 0.00162559, 0.00100589},
    {0.00110402, 0.00314895, -0.00081692, 0.00224104, 0.00201693, 0.00246514, 0.0015254},
    {0.00586796, -0.00190006, -0.0043231, 0.00147449, 0.00132704, 0.00162194, 0.00100363},
    {0.00264791, 0.00139082, -0.00036242, 0.00144669, 0.00130202, 0.00159136, 0.00098471},
    {-0.00512888, -0.01441165, 0.00908995, 0.00142674, 0.00128407, 0.00156941, 0.00097113},
    {-0.0009018, 0.00378225, -0.00364194, 0.00185903, 0.00167313, 0.00204493, 0.00126538},
    {0.00388586, 0.00082845, 0.00142443, 0.00170608, 0.00153547, 0.00187668, 0.00116127},
    {-0.04303293, -0.0049154, 0.01202445, 0.00200854, 0.00180769, 0.0022094, 0.00136714},
    {-0.0007596, -0.0002126, -0.00253843, 0.00141583, 0.00127425, 0.00155742, 0.00096371},
    {0.01637526, 0.02063166, -0.01297075, 0.00180604, 0.00162544, 0.00198665, 0.00122931},
    {0.00072535, 0.00211668, -0.00255032, 0.00143215, 0.00128893, 0.00157536, 0.00097481},
    {-0.00568054, -0.00830358, 0.00359446, 0.00142976, 0.00128678, 0.00157274, 0.00097319},
    {0.07927541, 0.01642098, 0.00979668, 0.00266869, 0.00240182, 0.00293556, 0.00181648},
    {-0.01593016, 0.00651482, -0.00978749, 0.00151585, 0.00136427, 0.00166744, 0.00103179},
    {0.00289213, 0.00245474, 0.00381934, 0.00153579, 0.00138221, 0.00168937, 0.00104536},
    {-0.02987663, -0.10054172, 0.07289482, 0.0018883, 0.00169947, 0.00207713, 0.0012853},
    {0.00486177, -0.00071188, -0.00169318, 0.00154825, 0.00139342, 0.00170307, 0.00105384},
    {-0.00014279, 0.00061871, 8.042e-05, 0.0015918, 0.00143262, 0.00175098, 0.00108348},
    {-0.00980777, -0.01377761, -0.00196674, 0.00147304, 0.00132574, 0.00162035, 0.00100265},
    {-0.00019541, 9.609e-05, -0.00063401, 0.00147523, 0.00132771, 0.00162275, 0.00100414},
    {0.00702467, 0.01336751, -0.0097928, 0.00149602, 0.00134642, 0.00164562, 0.00101829},
    {0.00450103, -0.00960993, -0.00134905, 0.00186105, 0.00167495, 0.00204716, 0.00126676},
    {0.017809, -0.03043698, -0.00077102, 0.00259928, 0.00233935, 0.00285921, 0.00176924},
    {-0.00699158, -0.00654261, 0.00210263, 0.00147209, 0.00132488, 0.0016193, 0.001002},
    {0.00028066, -0.00385005, -0.00257506, 0.00175419, 0.00157877, 0.00192961, 0.00119402},
    {-0.01095207, -0.00582049, -0.00701754, 0.00153196, 0.00137876, 0.00168516, 0.00104275},
    {-0.0154838, -0.01783906, 8e-06, 0.00184244, 0.0016582, 0.00202668, 0.00125408},
    {-0.0428715, 0.001527, 0.01632547, 0.00165256, 0.00148731, 0.00181782, 0.00112484},
    {-0.01782996, -0.00537839, 0.00403944, 0.00157887, 0.00142098, 0.00173676, 0.00107468},
    {-0.01049125, 0.02543488, 0.00444717, 0.00204854, 0.00184368, 0.00225339, 0.00139437},
    {-0.00644629, -0.02273285, 0.00689277, 0.00182985, 0.00164687, 0.00201284, 0.00124552},
    {0.01967464, -0.00627334, 0.00463923, 0.00259964, 0.00233968, 0.00285961, 0.00176949},
    {-0.0009467, -0.00478769, 0.00261763, 0.00157247, 0.00141522, 0.00172972, 0.00107033},
    {-0.01976991, -0.02837083, -0.00650692, 0.00186746, 0.00168071, 0.0020542, 0.00127111},
    {0.00024922, 0.00034964, 4.46e-05, 0.00143555, 0.00129199, 0.0015791, 0.00097713},
    {0.02475694, -0.01047288, -0.00480843, 0.00151303, 0.00136173, 0.00166433, 0.00102987}
}};

}  // namespace

TemplateTable embedded_template() {
  TemplateTable t;
  t.gammas.resize(145, 3);
  t.se_x.resize(145, 3);
  t.se_y.resize(145);
  for (std::size_t j = 0; j < kTemplateRows.size(); ++j) {
    const auto& r = kTemplateRows[j];
    const auto row = static_cast<Eigen::Index>(j);
    for (Eigen::Index k = 0; k < 3; ++k) {
      t.gammas(row, k) = r[static_cast<std::size_t>(k)];
      t.se_x(row, k) = r[static_cast<std::size_t>(k) + 3];
    }
    t.se_y(row) = r[6];
  }
  return t;
}

}  // namespace mvmr
