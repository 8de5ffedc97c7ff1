// Generated by tests/oracle/make_golden.py (mpmath, 50 digits). Do not edit.
#pragma once

#include <array>

namespace hegf::golden {

struct RealPoint {
  double x;
  double value;
};

struct ComplexPoint {
  double re;
  double im;
  double value_re;
  double value_im;
};

inline constexpr std::array<RealPoint, 247> kErfcx{{
    {-26, 7.657724931490568351526774e+293},
    {-20, 1.044293937952828790117753e+174},
    {-12, 6.909321313435092646251704e+62},
    {-8, 1.247029816162323376581848e+28},
    {-5, 1.440097986746610404105896e+11},
    {-3, 1.620598885399958662546957e+4},
    {-2, 1.089409043899779724123554e+2},
    {-1.5, 1.865388625626273393874642e+1},
    {-1, 5.008980080762283466309825},
    {-0.5, 1.952360489182557093276048},
    {-0.25, 1.358642370104722115210042},
    {-0.001, 1.001129379919848591728966},
    {0.0, 1.000000000000000000000000},
    {1e-12, 9.999999999988716208329055e-1},
    {1e-06, 9.999988716218329037352249e-1},
    {0.001, 9.988726200811514086044508e-1},
    {0.01, 9.888154610463425103295187e-1},
    {0.0625, 9.332062486492741107992912e-1},
    {0.1, 8.964569799691266366633883e-1},
    {0.125, 8.732218450821508096042595e-1},
    {0.1875, 8.191813080586719285068006e-1},
    {0.25, 7.703465477309967439167392e-1},
    {0.3125, 7.260859551237694446460409e-1},
    {0.375, 6.858572331012928654833568e-1},
    {0.4375, 6.491932500538647394802357e-1},
    {0.4687499999990905, 6.320696892500433979990986e-1},
    {0.46875, 6.320696892495560781564625e-1},
    {0.4687500000009095, 6.320696892490687583138270e-1},
    {0.5, 6.156903441929258748707934e-1},
    {0.5625, 5.849986214749657776233868e-1},
    {0.625, 5.568138808733625049356620e-1},
    {0.6875, 5.308708724175544746040457e-1},
    {0.75, 5.069376502931448057914318e-1},
    {0.8125, 4.848108285616202166242079e-1},
    {0.875, 4.643115832026690018785527e-1},
    {0.9375, 4.452822731368816786059248e-1},
    {1.0, 4.275835761558070044107503e-1},
    {1.0625, 4.110920544448304843018127e-1},
    {1.125, 3.956980795529959014044474e-1},
    {1.1875, 3.813040589667178980766250e-1},
    {1.25, 3.678229164523610929260111e-1},
    {1.3125, 3.551767864976341444421278e-1},
    {1.375, 3.432958898621253798874683e-1},
    {1.4375, 3.321175627283723359090859e-1},
    {1.5, 3.215854164543175023543226e-1},
    {1.5625, 3.116486086481300530675159e-1},
    {1.625, 3.022612093634859174056628e-1},
    {1.6875, 2.933816487652772378938918e-1},
    {1.75, 2.849722347374363892091639e-1},
    {1.8125, 2.769987306730527504537645e-1},
    {1.875, 2.694299851646704517460504e-1},
    {1.9375, 2.622376065503814388225337e-1},
    {2.0, 2.553956763105057438650886e-1},
    {2.0625, 2.488804961841623612280047e-1},
    {2.125, 2.426703646126545465876558e-1},
    {2.1875, 2.367453787401462899469969e-1},
    {2.25, 2.310872587303918699574999e-1},
    {2.3125, 2.256791916068193859993322e-1},
    {2.375, 2.205056922049066646387442e-1},
    {2.4375, 2.155524791511774883403371e-1},
    {2.5, 2.108063640611435806471120e-1},
    {2.5625, 2.062551523865008985620186e-1},
    {2.625, 2.018875545460170095198750e-1},
    {2.6875, 1.976931061499729735503833e-1},
    {2.75, 1.936620962790686786026835e-1},
    {2.8125, 1.897855029089946235124127e-1},
    {2.875, 1.860549346844711038291308e-1},
    {2.9375, 1.824625783440347177735983e-1},
    {3.0, 1.790011511813899504192948e-1},
    {3.0625, 1.756638580025843353615185e-1},
    {3.125, 1.724443521021736078607390e-1},
    {3.1875, 1.693366998372477630238042e-1},
    {3.25, 1.663353484268218767633829e-1},
    {3.3125, 1.634350966466223174954532e-1},
    {3.375, 1.606310681265444042165054e-1},
    {3.4375, 1.579186869907276090597838e-1},
    {3.5, 1.552936556088942974027265e-1},
    {3.5625, 1.527519342528474971956536e-1},
    {3.625, 1.502897224742693603488198e-1},
    {3.6875, 1.479034420395899916814641e-1},
    {3.75, 1.455897212750385390456688e-1},
    {3.8125, 1.433453806903321057690198e-1},
    {3.875, 1.411674197630517920811778e-1},
    {3.9375, 1.390530047778145233969445e-1},
    {4.0, 1.369994576250613898894452e-1},
    {4.0625, 1.350042454738106783108007e-1},
    {4.125, 1.330649712412082561132981e-1},
    {4.1875, 1.311793647892729552192734e-1},
    {4.25, 1.293452747859879107982713e-1},
    {4.3125, 1.275606611739246957170640e-1},
    {4.375, 1.258235881949880691879969e-1},
    {4.4375, 1.241322179247075600412348e-1},
    {4.5, 1.224848042738414175492255e-1},
    {4.5625, 1.208796874189544799508143e-1},
    {4.625, 1.193152886271333278601412e-1},
    {4.6875, 1.177901054431529602160524e-1},
    {4.75, 1.163027072102473076653313e-1},
    {4.8125, 1.148517308981948768555462e-1},
    {4.875, 1.134358772147404908392434e-1},
    {4.9375, 1.120539069784608271406228e-1},
    {5.0, 1.107046377330686263702121e-1},
    {5.0625, 1.093869405848587845268583e-1},
    {5.125, 1.080997372465474664702412e-1},
    {5.1875, 1.068419972721592599249818e-1},
    {5.25, 1.056127354688918024029008e-1},
    {5.3125, 1.044110094730452428499669e-1},
    {5.375, 1.032359174781569275937449e-1},
    {5.4375, 1.020865961044401671136014e-1},
    {5.5, 1.009622183994990882327985e-1},
    {5.5625, 9.986199196108767354145647e-2},
    {5.625, 9.878515717340754008093498e-2},
    {5.6875, 9.773098554910244896752196e-2},
    {5.75, 9.669877816971392081660820e-2},
    {5.8125, 9.568786421791700546351432e-2},
    {5.875, 9.469759959536302459820343e-2},
    {5.9375, 9.372736562042129629807703e-2},
    {6.0, 9.277656780053835438948671e-2},
    {6.0625, 9.184463467432450191664811e-2},
    {6.125, 9.093101671883685175724650e-2},
    {6.1875, 9.003518531785816590958408e-2},
    {6.25, 8.915663178727438987334262e-2},
    {6.3125, 8.829486645393312442754188e-2},
    {6.375, 8.744941778462249680297119e-2},
    {6.4375, 8.661983156204690042946780e-2},
    {6.5, 8.580567010489460177788759e-2},
    {6.5625, 8.500651152929383793848733e-2},
    {6.625, 8.422194904914017811303325e-2},
    {6.6875, 8.345159031294989412527364e-2},
    {6.75, 8.269505677505305952677667e-2},
    {6.8125, 8.195198309908714770624054e-2},
    {6.875, 8.122201659188800436512275e-2},
    {6.9375, 8.050481666600111974514870e-2},
    {7.0, 7.980005432915293348986450e-2},
    {7.0625, 7.910741169913021129931689e-2},
    {7.125, 7.842658154261601448794647e-2},
    {7.1875, 7.775726683662405967744880e-2},
    {7.25, 7.709918035125990166373285e-2},
    {7.3125, 7.645204425261788540301630e-2},
    {7.375, 7.581558972469767677657785e-2},
    {7.4375, 7.518955660929383029361032e-2},
    {7.5, 7.457369306287668300512925e-2},
    {7.5625, 7.396775522954324254736793e-2},
    {7.625, 7.337150692917299834798414e-2},
    {7.6875, 7.278471935997603621953410e-2},
    {7.75, 7.220717081466976050810180e-2},
    {7.8125, 7.163864640956618458063735e-2},
    {7.875, 7.107893782589437885809159e-2},
    {7.9375, 7.052784306272248597331910e-2},
    {8.0, 6.998516620088092772275225e-2},
    {8.0625, 6.945071717732322516401502e-2},
    {8.125, 6.892431156939340380990276e-2},
    {8.1875, 6.840577038849941937202498e-2},
    {8.25, 6.789491988272056268307293e-2},
    {8.3125, 6.739159134790352083397936e-2},
    {8.375, 6.689562094682681047304571e-2},
    {8.4375, 6.640684953603677445442366e-2},
    {8.5, 6.592512249998035174081049e-2},
    {8.5625, 6.545028959208049182993265e-2},
    {8.625, 6.498220478241948081904212e-2},
    {8.6875, 6.452072611171366162673362e-2},
    {8.75, 6.406571555128014472042602e-2},
    {8.8125, 6.361703886871219108717131e-2},
    {8.875, 6.317456549899507399267154e-2},
    {8.9375, 6.273816842080845328825078e-2},
    {9.0, 6.230772403777468414653749e-2},
    {9.0625, 6.188311206442508548639713e-2},
    {9.125, 6.146421541666806250992133e-2},
    {9.1875, 6.105092010655415970479453e-2},
    {9.25, 6.064311514114365907922512e-2},
    {9.3125, 6.024069242529227398394295e-2},
    {9.375, 5.984354666817985952748529e-2},
    {9.4375, 5.945157529341590160674281e-2},
    {9.5, 5.906467835256389085406461e-2},
    {9.5625, 5.868275844193456602073557e-2},
    {9.625, 5.830572062250545208828212e-2},
    {9.6875, 5.793347234283114842569036e-2},
    {9.75, 5.756592336481546651994594e-2},
    {9.8125, 5.720298569222279848017470e-2},
    {9.875, 5.684457350181203840353144e-2},
    {9.9375, 5.649060307698199912441794e-2},
    {10.0, 5.614099274382258585751739e-2},
    {10.0625, 5.579566280947102357142248e-2},
    {10.125, 5.545453550267720323289701e-2},
    {10.1875, 5.511753491648672891858645e-2},
    {10.25, 5.478458695295452778813613e-2},
    {10.3125, 5.445561926980594171529042e-2},
    {10.375, 5.413056122896606578791676e-2},
    {10.4375, 5.380934384688174691980894e-2},
    {10.5, 5.349189974656411672592810e-2},
    {10.5625, 5.317816311128281716151119e-2},
    {10.625, 5.286806963984619512754429e-2},
    {10.6875, 5.256155650340470260723912e-2},
    {10.75, 5.225856230371755066070740e-2},
    {10.8125, 5.195902703282533697916967e-2},
    {10.875, 5.166289203407390540239383e-2},
    {10.9375, 5.137009996443710908792895e-2},
    {11.0, 5.108059475808844370998558e-2},
    {11.0625, 5.079432159117369957689528e-2},
    {11.125, 5.051122684773885792775308e-2},
    {11.1875, 5.023125808676943258546573e-2},
    {11.25, 4.995436401029933895741398e-2},
    {11.3125, 4.968049443254916312773331e-2},
    {11.375, 4.940960025005540922683228e-2},
    {11.4375, 4.914163341275392787099653e-2},
    {11.5, 4.887654689598227645835096e-2},
    {11.5625, 4.861429467336723746730029e-2},
    {11.625, 4.835483169056512738452310e-2},
    {11.6875, 4.809811383982387003461915e-2},
    {11.75, 4.784409793533708723676852e-2},
    {11.8125, 4.759274168936168003268077e-2},
    {11.875, 4.734400368907153819667375e-2},
    {11.9375, 4.709784337412112717000086e-2},
    {12.0, 4.685422101489376261958841e-2},
    {12.589254117941675, 4.467510672604064803681500e-2},
    {26.5, 2.127504668537110595521158e-2},
    {27.0, 2.088160799042094067409449e-2},
    {29.51209226666387, 1.910627842009078563803127e-2},
    {34.64101615137755, 1.627997271582693893898774e-2},
    {40.0, 1.410033598337781362474129e-2},
    {69.18309709189366, 8.154168977198677104303742e-3},
    {162.18100973589299, 3.478698647475524135752230e-3},
    {380.1893963205613, 1.483964669738369901225849e-3},
    {891.2509381337459, 6.330307259967896627837235e-4},
    {2089.296130854039, 2.700380815298653335019906e-4},
    {4897.7881936844615, 1.151927256706594471126559e-4},
    {11481.53621496884, 4.913885832387975517254595e-5},
    {26915.348039269138, 2.096163060329786221353814e-5},
    {63095.73444801943, 8.941802301100041274281570e-6},
    {147910.83881682073, 3.814389723214126233000088e-6},
    {346736.85045253095, 1.627140532680845622010527e-6},
    {812830.5161640996, 6.941048254559220060541493e-7},
    {1905460.7179632443, 2.960909024410345361285444e-7},
    {4466835.921509635, 1.263063146848397674770058e-7},
    {10471285.480508985, 5.387968693986268454508393e-8},
    {24547089.156850334, 2.298397092798711473209284e-8},
    {57543993.73371567, 9.804491258610561582011490e-9},
    {134896288.2591656, 4.182395163192505767535288e-9},
    {316227766.01683795, 1.784124116152770985325849e-9},
    {741310241.3009162, 7.610708069507672633725975e-10},
    {1737800828.7493763, 3.246572186029973871002129e-10},
    {4073802778.041122, 1.384921200871303494290050e-10},
    {9549925860.21433, 5.907790194458054991108704e-11},
    {22387211385.683376, 2.520142298332679237555565e-11},
    {52480746024.97712, 1.075041088934295998904856e-11},
    {123026877081.23811, 4.585905104095310881090646e-12},
    {288403150312.66, 1.956253192574748980008545e-12},
    {676082975391.9819, 8.344975455426137974662749e-13},
}};

inline constexpr std::array<RealPoint, 129> kErfc{{
    {-6.0, 1.999999999999999978480263},
    {-5.75, 1.999999999999999576786338},
    {-5.5, 1.999999999999992642152082},
    {-5.25, 1.999999999999886896867331},
    {-5.0, 1.999999999998462540205572},
    {-4.75, 1.999999999981514952278515},
    {-4.5, 1.999999999803383955845711},
    {-4.25, 1.999999998149425862613257},
    {-4.0, 1.999999984582742099719981},
    {-3.75, 1.999999886272743430203347},
    {-3.5, 1.999999256901627658587254},
    {-3.25, 1.999995697220536324878170},
    {-3.0, 1.999977909503001414558627},
    {-2.75, 1.999899378077880363163096},
    {-2.5, 1.999593047982555041060436},
    {-2.25, 1.998537283413318848302089},
    {-2.0, 1.995322265018952734162069},
    {-1.75, 1.986671671219182443772211},
    {-1.5, 1.966105146475310727066976},
    {-1.25, 1.922900128256458230136523},
    {-1.0, 1.842700792949714869341221},
    {-0.75, 1.711155633653515131598938},
    {-0.5, 1.520499877813046537682747},
    {-0.25, 1.276326390168236932985068},
    {0.0, 1.000000000000000000000000},
    {0.25, 7.236736098317630670149317e-1},
    {0.5, 4.795001221869534623172533e-1},
    {0.75, 2.888443663464848684010622e-1},
    {1.0, 1.572992070502851306587794e-1},
    {1.25, 7.709987174354176986347652e-2},
    {1.5, 3.389485352468927293302374e-2},
    {1.75, 1.332832878081755622778890e-2},
    {2.0, 4.677734981047265837930744e-3},
    {2.25, 1.462716586681151697910796e-3},
    {2.5, 4.069520174449589395642157e-4},
    {2.75, 1.006219221196368369043920e-4},
    {3.0, 2.209049699858544137277613e-5},
    {3.25, 4.302779463675121830475895e-6},
    {3.5, 7.430983723414127455236838e-7},
    {3.75, 1.137272565697966532590766e-7},
    {4.0, 1.541725790028001885215967e-8},
    {4.25, 1.850574137386742520055838e-9},
    {4.5, 1.966160441542887476279160e-10},
    {4.75, 1.848504772148531088742942e-11},
    {5.0, 1.537459794428034850188343e-12},
    {5.25, 1.131031326688715388278680e-13},
    {5.5, 7.357847917974398063068362e-15},
    {5.75, 4.232136617425737625946720e-16},
    {6.0, 2.151973671249891311659335e-17},
    {6.25, 9.672204131876253991482033e-19},
    {6.5, 3.842148327120647469875805e-20},
    {6.75, 1.348767889361130051219870e-21},
    {7.0, 4.183825607779414398614010e-23},
    {7.25, 1.146690081481501161669472e-24},
    {7.5, 2.776649386030569100663966e-26},
    {7.75, 5.939747859517146215275324e-28},
    {8.0, 1.122429717298292707996789e-29},
    {8.25, 1.873566470550499707861653e-31},
    {8.5, 2.762324071333771446134503e-33},
    {8.75, 3.597115728647072015655354e-35},
    {9.0, 4.137031746513810238053903e-37},
    {9.25, 4.202037214919711134532494e-39},
    {9.5, 3.769214485654879941677087e-41},
    {9.75, 2.985700832800578322056652e-43},
    {10.0, 2.088487583762544757000786e-45},
    {10.25, 1.290013890504290403797209e-47},
    {10.5, 7.035928090177522686735315e-50},
    {10.75, 3.388452427064942942660894e-52},
    {11.0, 1.440866137943694680339810e-54},
    {11.25, 5.409760870689921360947655e-57},
    {11.5, 1.793309643576782058109116e-59},
    {11.75, 5.248636097008541671157983e-62},
    {12.0, 1.356261169205904212780306e-64},
    {12.25, 3.094126740540209854237030e-67},
    {12.5, 6.231942781979911006139549e-70},
    {12.75, 1.108134576852057960907593e-72},
    {13.0, 1.739557315466724521804199e-75},
    {13.25, 2.410771372637134615588253e-78},
    {13.5, 2.949433113257988264759187e-81},
    {13.75, 3.185523620640338001790800e-84},
    {14.0, 3.037229847750311665115173e-87},
    {14.25, 2.556372343088648868939700e-90},
    {14.5, 1.899395941979503049574200e-93},
    {14.75, 1.245797352185758615141408e-96},
    {15.0, 7.212994172451206666565067e-100},
    {15.25, 3.686515149230813465764332e-103},
    {15.5, 1.663201640048872334149103e-106},
    {15.75, 6.623668412559063808762122e-110},
    {16.0, 2.328485751571530693364873e-113},
    {16.25, 7.225478196226944360486775e-117},
    {16.5, 1.979130575553267972057334e-120},
    {16.75, 4.785134183467091950453595e-124},
    {17.0, 1.021228015094260881145599e-127},
    {17.25, 1.923789189586878804528004e-131},
    {17.5, 3.198863812343480988193469e-135},
    {17.75, 4.694993499922695090818201e-139},
    {18.0, 6.082369231816399307668467e-143},
    {18.25, 6.955154367397821601893728e-147},
    {18.5, 7.019961574985679324600020e-151},
    {18.75, 6.253951588878104938080163e-155},
    {19.0, 4.917722839256475446413298e-159},
    {19.25, 3.413196955966576099558099e-163},
    {19.5, 2.090954147922729460496243e-167},
    {19.75, 1.130607053466201413823813e-171},
    {20.0, 5.395865611607900928934999e-176},
    {20.25, 2.272956417880783670852495e-180},
    {20.5, 8.450842369572458394324669e-185},
    {20.75, 2.773232110564736291495298e-189},
    {21.0, 8.032453871022455669021357e-194},
    {21.25, 2.053452158444984112647948e-198},
    {21.5, 4.633336539658445649129686e-203},
    {21.75, 9.227299967997719828242606e-208},
    {22.0, 1.621905860933472513052035e-212},
    {22.25, 2.516202428760510733789701e-217},
    {22.5, 3.445348860464601762032717e-222},
    {22.75, 4.163775674054040907034329e-227},
    {23.0, 4.441265948088057244074884e-232},
    {23.25, 4.181099003178296282154476e-237},
    {23.5, 3.474059495649971502741912e-242},
    {23.75, 2.547687348154478056649047e-247},
    {24.0, 1.648982583151933514218512e-252},
    {24.25, 9.419895378132563858808978e-258},
    {24.5, 4.749361264067378997552878e-263},
    {24.75, 2.113403975655410135839019e-268},
    {25.0, 8.300172571196522752044013e-274},
    {25.25, 2.877054827329395001623819e-279},
    {25.5, 8.801662690727950571267150e-285},
    {25.75, 2.376490305702940641629790e-290},
    {26.0, 5.663192408856142846475728e-296},
}};

inline constexpr std::array<ComplexPoint, 426> kErfcxComplex{{
    {-4.0, 0.0, 1.777222090401628764846466e+7, 0.0},
    {-4.0, 0.01, 1.771360867202119999660210e+7, -1.420119586909605124086989e+6},
    {-4.0, 0.3, -1.197718174443500197207604e+7, -1.097126951270708581222069e+7},
    {-4.0, 0.7, 8.444153062041628319028210e+6, 6.873061757794789735866088e+6},
    {-4.0, 1.0, -9.512844063194340373990560e+5, -6.468458622399624671768683e+6},
    {-4.0, 1.5, 1.580688815859526460150077e+6, 1.005096711747645734750913e+6},
    {-4.0, 2.0, -3.117274500804062158348952e+5, 9.371523501633042213364890e+4},
    {-4.0, 3.0, 9.302465952058438492155060e+2, 1.986108926333060007158783e+3},
    {-4.0, 4.0, 1.596876287586655215266373, -1.172227881097152562024231},
    {-4.0, 5.0, -5.616199053357678704298028e-2, -6.847879418323710278336305e-2},
    {-4.0, 6.0, -4.414092606251402644419090e-2, -6.493254196282473948841967e-2},
    {-4.0, 7.0, -3.526380841803758640598539e-2, -6.075503109887671304591683e-2},
    {-4.0, 8.0, -2.860274785395495676399288e-2, -5.648422254928216236172127e-2},
    {-4.0, 10.0, -1.966290706575166802836013e-2, -4.873000204716814078529544e-2},
    {-4.0, 15.0, -9.417723621968476347910837e-3, -3.516916388391538544143208e-2},
    {-4.0, 30.0, -2.467660759229071549059673e-3, -1.848721939106969155208937e-2},
    {-4.0, 100.0, -2.253490087036873778063141e-4, -5.633162661120128564939299e-3},
    {-2.0, 0.0, 1.089409043899779724123554e+2, 0.0},
    {-2.0, 0.01, 1.088426528271892147547909e+2, -4.367318637552051592928645},
    {-2.0, 0.3, 3.591086730537000541704316e+1, -9.304717308822320461097017e+1},
    {-2.0, 0.7, -6.326756235726804521962450e+1, -2.247929448985425009299148e+1},
    {-2.0, 1.0, -2.647605877819920685747751e+1, 3.030857111674330725835946e+1},
    {-2.0, 1.5, 1.086746223957762117149679e+1, 3.096552114299753422968066},
    {-2.0, 2.0, -4.389528271292428759664391e-1, -2.109896210330981409201504},
    {-2.0, 3.0, -8.133907992862736045365699e-2, -1.210861624629984489431950e-1},
    {-2.0, 4.0, -5.969869773686446857797441e-2, -1.132065182462585604332121e-1},
    {-2.0, 5.0, -4.064367571463299553915337e-2, -9.798731254106442805048477e-2},
    {-2.0, 6.0, -2.917014429031089805531512e-2, -8.525967060153929692708551e-2},
    {-2.0, 7.0, -2.185339668743829137821625e-2, -7.500963593542481548318642e-2},
    {-2.0, 8.0, -1.694200341113103539294051e-2, -6.675215241849695459211362e-2},
    {-2.0, 10.0, -1.100155670573351558719935e-2, -5.447181709865651477599949e-2},
    {-2.0, 15.0, -4.959276753636046845104650e-3, -3.703112494682467650618329e-2},
    {-2.0, 30.0, -1.250271612333610743101477e-3, -1.873329438084475794506692e-2},
    {-2.0, 100.0, -1.128097069496477460506339e-4, -5.639921439997835366091802e-3},
    {-1.0, 0.0, 5.008980080762283466309825, 0.0},
    {-1.0, 0.01, 5.007364720593028526948337, -1.114451935954779311176303e-1},
    {-1.0, 0.3, 3.686810273325686165030515, -2.885372406382802335472559},
    {-1.0, 0.7, 2.058900187446322907773788e-1, -3.448781956704632586022810},
    {-1.0, 1.0, -1.137037878351197366452275, -2.026813791854195018079477},
    {-1.0, 1.5, -7.791117842317566926892659e-1, -3.140340958886437362603750e-1},
    {-1.0, 2.0, -2.053255806465875132838257e-1, -1.468554850301673930642136e-1},
    {-1.0, 3.0, -6.467357479385968703566062e-2, -1.737308485017439644602262e-1},
    {-1.0, 4.0, -3.628154550758459150437111e-2, -1.358395562946219654816118e-1},
    {-1.0, 5.0, -2.300313265741212080251853e-2, -1.103328325125049010276492e-1},
    {-1.0, 6.0, -1.588512815610795313771039e-2, -9.262874629951642786373944e-2},
    {-1.0, 7.0, -1.162996304313675808152451e-2, -7.973205590137561629914465e-2},
    {-1.0, 8.0, -8.883661074217762522254851e-3, -6.995040848005313894618009e-2},
    {-1.0, 10.0, -5.669942566902178524456009e-3, -5.612964531595126131697371e-2},
    {-1.0, 15.0, -2.513068301263503698980842e-3, -3.752811696561413025324585e-2},
    {-1.0, 30.0, -6.272253836101256011754344e-4, -1.879584239989071262938960e-2},
    {-1.0, 100.0, -5.642177916144133467444444e-5, -5.641613670145866964917615e-3},
    {-0.5, 0.0, 1.952360489182557093276048, 0.0},
    {-0.5, 0.01, 1.952011241658501387837813, -3.080417867263774111494455e-2},
    {-0.5, 0.3, 1.657862537428464801305461, -8.415571691202953716309278e-1},
    {-0.5, 0.7, 7.371656625260691852986008e-1, -1.305950756901099176857042},
    {-0.5, 1.0, 1.555411424543310759012057e-1, -1.137837215781686377738087},
    {-0.5, 1.5, -1.774895537974540323631805e-1, -6.077128514252097244860509e-1},
    {-0.5, 2.0, -1.229324948227623741212920e-1, -3.275551363333125876272229e-1},
    {-0.5, 3.0, -3.744011710042425957138364e-2, -1.930284794273171125044667e-1},
    {-0.5, 4.0, -1.922513441916335976983885e-2, -1.432558579816224028738567e-1},
    {-0.5, 5.0, -1.190032551247715191468573e-2, -1.139727185976867367573588e-1},
    {-0.5, 6.0, -8.124885586461946281404704e-3, -9.468791486012607278359029e-2},
    {-0.5, 7.0, -5.910424131058673737705207e-3, -8.101143885794780849513575e-2},
    {-0.5, 8.0, -4.496705370059768753828761e-3, -7.080011061892225445351984e-2},
    {-0.5, 10.0, -2.856953699322313180461058e-3, -5.656032893530877117757511e-2},
    {-0.5, 15.0, -1.260784200718206706085476e-3, -3.765447550731251695966305e-2},
    {-0.5, 30.0, -3.138749836928479218855693e-4, -1.881154486772566965774302e-2},
    {-0.5, 100.0, -2.821300608535615959522149e-5, -5.642036886396899938725501e-3},
    {0.0, 0.0, 1.000000000000000000000000, 0.0},
    {0.0, 0.01, 9.999000049998333374957537e-1, -1.128303944826631372294729e-2},
    {0.0, 0.3, 9.139311852712281928353582e-1, -3.189156827715658587147850e-1},
    {0.0, 0.7, 6.126263941844161070770880e-1, -5.760421432675655498560510e-1},
    {0.0, 1.0, 3.678794411714423215955238e-1, -6.071577058413937291150382e-1},
    {0.0, 1.5, 1.053992245618643367832177e-1, -4.832273301407690579269023e-1},
    {0.0, 2.0, 1.831563888873418029371802e-2, -3.400262170660662012804679e-1},
    {0.0, 3.0, 1.234098040866795494976367e-4, -2.011573170376003866613244e-1},
    {0.0, 4.0, 1.125351747192591145137752e-7, -1.459535899001527832652166e-1},
    {0.0, 5.0, 1.388794386496402059466176e-11, -1.152459618309365884803128e-1},
    {0.0, 6.0, 2.319522830243569388312264e-16, -9.539620896911076602255504e-2},
    {0.0, 7.0, 5.242885663363463937171805e-22, -8.144750806500296756339810e-2},
    {0.0, 8.0, 1.603810890548637852976087e-28, -7.108811174448087960287425e-2},
    {0.0, 10.0, 3.720075976020835962959696e-44, -5.670539423288759408509059e-2},
    {0.0, 15.0, 1.921947727823849068480597e-98, -3.769678605913683326179848e-2},
    {0.0, 30.0, 0.0, -1.881678486866072779050221e-2},
    {0.0, 100.0, 0.0, -5.642177972594137772558692e-3},
    {0.25, 0.0, 7.703465477309967439167392e-1, 0.0},
    {0.25, 0.01, 7.702880956486521560514985e-1, -7.431660899380079480430941e-3},
    {0.25, 0.3, 7.196521320936136924732609e-1, -2.125352662061249244705965e-1},
    {0.25, 0.7, 5.347705109131834553390149e-1, -4.038786904589875641617395e-1},
    {0.25, 1.0, 3.716582562332474214290322e-1, -4.522050942213365061015777e-1},
    {0.25, 1.5, 1.657740967555021213797157e-1, -4.061884824018252141159554e-1},
    {0.25, 2.0, 6.826348927066790087633039e-2, -3.157076627109941789797093e-1},
    {0.25, 3.0, 1.939221549012719367423098e-2, -1.988980790215781520765129e-1},
    {0.25, 4.0, 9.761348485377448188239408e-3, -1.452672591487992163137550e-1},
    {0.25, 5.0, 6.002452363364683886584219e-3, -1.149246933325661567335699e-1},
    {0.25, 6.0, 4.085938339835254318775130e-3, -9.521807564156685639748708e-2},
    {0.25, 7.0, 2.967400248039468626958885e-3, -8.133803039208567906012272e-2},
    {0.25, 8.0, 2.255322105981218655422250e-3, -7.101588435398872029051770e-2},
    {0.25, 10.0, 1.431251917897636682932555e-3, -5.666905669683180329609921e-2},
    {0.25, 15.0, 6.309256253795779584784841e-4, -3.768619942785774251395444e-2},
    {0.25, 30.0, 1.569703126929179744775330e-4, -1.881547459415559349487167e-2},
    {0.25, 100.0, 1.410676763057380083729432e-5, -5.642142700383193118414208e-3},
    {0.5, 0.0, 6.156903441929258748707934e-1, 0.0},
    {0.5, 0.01, 6.156544108413242199526574e-1, -5.126666224851723413473786e-3},
    {0.5, 0.3, 5.843329734596311557093965e-1, -1.479648188906386603664314e-1},
    {0.5, 0.7, 4.661266851480537031289079e-1, -2.924315941550455762924933e-1},
    {0.5, 1.0, 3.549003328675778839224456e-1, -3.428717191311007165523378e-1},
    {0.5, 1.5, 1.966360322435819623638857e-1, -3.377203183468879459059382e-1},
    {0.5, 2.0, 1.033588237413666589530623e-1, -2.847858847500937455832829e-1},
    {0.5, 3.0, 3.712636605469234466712036e-2, -1.929837553003620883910076e-1},
    {0.5, 4.0, 1.922494551873933112187565e-2, -1.432560766945535881019999e-1},
    {0.5, 5.0, 1.190032552259394838936288e-2, -1.139727186318867190551475e-1},
    {0.5, 6.0, 8.124885586462518221482120e-3, -9.468791486012623922169391e-2},
    {0.5, 7.0, 5.910424131058673738720261e-3, -8.101143885794780849425119e-2},
    {0.5, 8.0, 4.496705370059768753828761e-3, -7.080011061892225445351984e-2},
    {0.5, 10.0, 2.856953699322313180461058e-3, -5.656032893530877117757511e-2},
    {0.5, 15.0, 1.260784200718206706085476e-3, -3.765447550731251695966305e-2},
    {0.5, 30.0, 3.138749836928479218855693e-4, -1.881154486772566965774302e-2},
    {0.5, 100.0, 2.821300608535615959522149e-5, -5.642036886396899938725501e-3},
    {1.0, 0.0, 4.275835761558070044107503e-1, 0.0},
    {1.0, 0.01, 4.275681393753858056817332e-1, -2.732040922536203599640446e-3},
    {1.0, 0.3, 4.139894581245687012654126e-1, -7.986436645995613204953623e-2},
    {1.0, 0.7, 3.601995542591289337466205e-1, -1.666604398814646968176595e-1},
    {1.0, 1.0, 3.047442052569125924571388e-1, -2.082189382028316272874373e-1},
    {1.0, 1.5, 2.118365859685105642565866e-1, -2.331709774044424399685222e-1},
    {1.0, 2.0, 1.402395813662779436959595e-1, -2.222134401798991026057945e-1},
    {1.0, 3.0, 6.531777728904696676916115e-2, -1.739183154163489669341189e-1},
    {1.0, 4.0, 3.628145648998864120640567e-2, -1.358389510006550660613434e-1},
    {1.0, 5.0, 2.300313259405996251176655e-2, -1.103328325535799587983601e-1},
    {1.0, 6.0, 1.588512815610901725725805e-2, -9.262874629951710449471910e-2},
    {1.0, 7.0, 1.162996304313675808191426e-2, -7.973205590137561629632109e-2},
    {1.0, 8.0, 8.883661074217762522254850e-3, -6.995040848005313894618009e-2},
    {1.0, 10.0, 5.669942566902178524456009e-3, -5.612964531595126131697371e-2},
    {1.0, 15.0, 2.513068301263503698980842e-3, -3.752811696561413025324585e-2},
    {1.0, 30.0, 6.272253836101256011754344e-4, -1.879584239989071262938960e-2},
    {1.0, 100.0, 5.642177916144133467444444e-5, -5.641613670145866964917615e-3},
    {1.5, 0.0, 3.215854164543175023543226e-1, 0.0},
    {1.5, 0.01, 3.215778014841034780319160e-1, -1.636196246934890275318763e-3},
    {1.5, 0.3, 3.148388188541635061547238e-1, -4.821010220729986292527670e-2},
    {1.5, 0.7, 2.872736596323165734844049e-1, -1.040539098885183002527883e-1},
    {1.5, 1.0, 2.571279392712283631817635e-1, -1.352422769955078270887840e-1},
    {1.5, 1.5, 2.011151175268522291441787e-1, -1.643485813502874900000877e-1},
    {1.5, 2.0, 1.504154388710397476173732e-1, -1.703711427624769856271016e-1},
    {1.5, 3.0, 8.320953528620925792741328e-2, -1.508797901286885260327614e-1},
    {1.5, 4.0, 4.986784694718558478681286e-2, -1.252675320545430225982081e-1},
    {1.5, 5.0, 3.269560040931664330661439e-2, -1.047996147688020530925413e-1},
    {1.5, 6.0, 2.297193825806337476372368e-2, -8.940020524826823666803693e-2},
    {1.5, 7.0, 1.698862836645316805574233e-2, -7.769098449449320786550898e-2},
    {1.5, 8.0, 1.306015894404598080035592e-2, -6.858011026153713453466706e-2},
    {1.5, 10.0, 8.397274707176635301311682e-3, -5.542652647773488407914270e-2},
    {1.5, 15.0, 3.748543874650971952587632e-3, -3.731941030095575876537886e-2},
    {1.5, 30.0, 9.395295409055038975308810e-4, -1.876972992324716609911072e-2},
    {1.5, 100.0, 8.462208833617733800073536e-5, -5.640908450831311419758013e-3},
    {2.0, 0.0, 2.553956763105057438650886e-1, 0.0},
    {2.0, 0.01, 2.553914960896521841205154e-1, -1.067949158080296295392074e-3},
    {2.0, 0.3, 2.516770702769032946625617e-1, -3.162591218802919239991438e-2},
    {2.0, 0.7, 2.361520318667528050210091e-1, -6.974778812812704816674949e-2},
    {2.0, 1.0, 2.184926152748906968223985e-1, -9.299780939260186604750304e-2},
    {2.0, 1.5, 1.833347623811499753436523e-1, -1.192982330062729387898604e-1},
    {2.0, 2.0, 1.479527595120158242287563e-1, -1.311797170842178535852567e-1},
    {2.0, 3.0, 9.271076642644333399002102e-2, -1.283169622282615753981198e-1},
    {2.0, 4.0, 5.968692961044589895089747e-2, -1.132100561244881957484638e-1},
    {2.0, 5.0, 4.064367633349437418853872e-2, -9.798731115657192184700010e-2},
    {2.0, 6.0, 2.917014429032164180165785e-2, -8.525967060156223371567377e-2},
    {2.0, 7.0, 2.185339668743829132310670e-2, -7.500963593542481546767697e-2},
    {2.0, 8.0, 1.694200341113103539294052e-2, -6.675215241849695459211361e-2},
    {2.0, 10.0, 1.100155670573351558719935e-2, -5.447181709865651477599949e-2},
    {2.0, 15.0, 4.959276753636046845104650e-3, -3.703112494682467650618329e-2},
    {2.0, 30.0, 1.250271612333610743101477e-3, -1.873329438084475794506692e-2},
    {2.0, 100.0, 1.128097069496477460506339e-4, -5.639921439997835366091802e-3},
    {3.0, 0.0, 1.790011511813899504192948e-1, 0.0},
    {3.0, 0.01, 1.789995627565042702557439e-1, -5.437181206731226971033651e-4},
    {3.0, 0.3, 1.775814038183155305390730e-1, -1.619151642349221016023996e-2},
    {3.0, 0.7, 1.715019196418476699456986e-1, -3.657693286128295443662868e-2},
    {3.0, 1.0, 1.642611363929861992384523e-1, -5.019713513524859061984690e-2},
    {3.0, 1.5, 1.486181869002293017268588e-1, -6.858526302274728640839923e-2},
    {3.0, 2.0, 1.307574696698485686122981e-1, -8.111265047745665300589860e-2},
    {3.0, 3.0, 9.640250558304454711070917e-2, -9.123632600421876111684723e-2},
    {3.0, 4.0, 6.979096164964831005232526e-2, -8.934000024036491536236007e-2},
    {3.0, 5.0, 5.122599656738662568107061e-2, -8.283691317190718403324529e-2},
    {3.0, 6.0, 3.855459744859335881293654e-2, -7.536948707088668074064660e-2},
    {3.0, 7.0, 2.979582194988339654984301e-2, -6.830654560357044281655109e-2},
    {3.0, 8.0, 2.359322812772812441257086e-2, -6.204131036433501859417492e-2},
    {3.0, 10.0, 1.572177869915237185641448e-2, -5.191987608830616261821046e-2},
    {3.0, 15.0, 7.277615562576473126404556e-3, -3.623166729173374109882825e-2},
    {3.0, 30.0, 1.865052039633992529808090e-3, -1.862996968636446756266378e-2},
    {3.0, 100.0, 1.691299996704312676859216e-4, -5.637103311709303160909887e-3},
    {4.0, 0.0, 1.369994576250613898894452e-1, 0.0},
    {4.0, 0.01, 1.369987110854404001167153e-1, -3.238333797761286613595994e-4},
    {4.0, 0.3, 1.363305562106071600994100e-1, -9.669853326112938464220160e-3},
    {4.0, 0.7, 1.334283685227285208222355e-1, -2.210495569362342363641783e-2},
    {4.0, 1.0, 1.298881599308405761820179e-1, -3.077886081705882881719623e-2},
    {4.0, 1.5, 1.219014205915503765551199e-1, -4.345317997883327530298581e-2},
    {4.0, 2.0, 1.121394779021160148756905e-1, -5.348899385296692835852335e-2},
    {4.0, 3.0, 9.093390419476534246046593e-2, -6.559233052791427773722684e-2},
    {4.0, 4.0, 7.157043342636532916467972e-2, -6.937451861377146070111474e-2},
    {4.0, 5.0, 5.599737714252387616078235e-2, -6.829488564492277667751325e-2},
    {4.0, 6.0, 4.414092342364237808323311e-2, -6.493254512980649577358613e-2},
    {4.0, 7.0, 3.526380841804553651666257e-2, -6.075503109888157273939200e-2},
    {4.0, 8.0, 2.860274785395495676510980e-2, -5.648422254928216235909890e-2},
    {4.0, 10.0, 1.966290706575166802836013e-2, -4.873000204716814078529544e-2},
    {4.0, 15.0, 9.417723621968476347910837e-3, -3.516916388391538544143208e-2},
    {4.0, 30.0, 2.467660759229071549059673e-3, -1.848721939106969155208937e-2},
    {4.0, 100.0, 2.253490087036873778063141e-4, -5.633162661120128564939299e-3},
    {5.0, 0.0, 1.107046377330686263702121e-1, 0.0},
    {5.0, 0.01, 1.107042336655587524273376e-1, -2.133271447539450596430484e-4},
    {5.0, 0.3, 1.103420911298074193512644e-1, -6.379569183152682629335637e-3},
    {5.0, 0.7, 1.087573433778548222167409e-1, -1.467883986052844897888058e-2},
    {5.0, 1.0, 1.067977383980653715844037e-1, -2.060408871468424946776233e-2},
    {5.0, 1.5, 1.022648625297421250958391e-1, -2.963515024750548026062430e-2},
    {5.0, 2.0, 9.649811260664138766724090e-2, -3.735165315636875312825985e-2},
    {5.0, 3.0, 8.298773797690172406852077e-2, -4.838936520291309115823347e-2},
    {5.0, 4.0, 6.923620958049142946249720e-2, -5.407022703592907251245184e-2},
    {5.0, 5.0, 5.696543988817697896740048e-2, -5.583874277539102823315202e-2},
    {5.0, 6.0, 4.675547952881820835470794e-2, -5.518959901539178141678527e-2},
    {5.0, 7.0, 3.854563715679407797602436e-2, -5.323351286639777645283595e-2},
    {5.0, 8.0, 3.203198864439671473880682e-2, -5.067302300980206716139651e-2},
    {5.0, 10.0, 2.276794835982029207124807e-2, -4.516957942734106023625213e-2},
    {5.0, 15.0, 1.134289860873347931347288e-2, -3.389197765779229460476737e-2},
    {5.0, 30.0, 3.054452620392764778042740e-3, -1.830687314347746903710914e-2},
    {5.0, 100.0, 2.814332873324522580788363e-4, -5.628104200252081907552624e-3},
    {6.0, 0.0, 9.277656780053835438948671e-2, 0.0},
    {6.0, 0.01, 9.277632635645051902424172e-2, -1.506031524432557465520980e-4},
    {6.0, 0.3, 9.255975156852855029919114e-2, -4.507802424713327318560121e-3},
    {6.0, 0.7, 9.160770058028738608411086e-2, -1.041260820499570932702713e-2},
    {6.0, 1.0, 9.042061181059991923301181e-2, -1.468696493570315247307122e-2},
    {6.0, 1.5, 8.763181749657524229894678e-2, -2.136666261934347138277271e-2},
    {6.0, 2.0, 8.399358387454510224103817e-2, -2.733248969643635581585917e-2},
    {6.0, 3.0, 7.503858437290147670104274e-2, -3.671614104216664831431859e-2},
    {6.0, 4.0, 6.522260524569174695777729e-2, -4.266604757657298649837686e-2},
    {6.0, 5.0, 5.577105489718027942150643e-2, -4.572512027681845683084300e-2},
    {6.0, 6.0, 4.733527113339601409850112e-2, -4.668274486973197331228221e-2},
    {6.0, 7.0, 4.012840761719335255336246e-2, -4.626716877531752618996389e-2},
    {6.0, 8.0, 3.411498969773123513760383e-2, -4.503163162443245820224048e-2},
    {6.0, 10.0, 2.506916613864447319170107e-2, -4.147375260940599144955559e-2},
    {6.0, 15.0, 1.303107178850170115555629e-2, -3.245240539024025537899121e-2},
    {6.0, 30.0, 3.622111719072420324291308e-3, -1.809118179340479736250832e-2},
    {6.0, 100.0, 3.373496567280730775560149e-4, -5.621933963249673427113053e-3},
    {7.0, 0.0, 7.980005432915293348986450e-2, 0.0},
    {7.0, 0.01, 7.979989920855186080661191e-2, -1.117838515780647642695024e-4},
    {7.0, 0.3, 7.966068059696367707046611e-2, -3.347772480773281518751872e-3},
    {7.0, 0.7, 7.904687989455594958122711e-2, -7.752378327584303079305905e-3},
    {7.0, 1.0, 7.827739669984565352284937e-2, -1.096896889202304618899886e-2},
    {7.0, 1.5, 7.645122759686567522847546e-2, -1.607640787636017316422386e-2},
    {7.0, 2.0, 7.402885044705824924993862e-2, -2.076774539528954022489022e-2},
    {7.0, 3.0, 6.786259500710993891299408e-2, -2.859826734818112068987182e-2},
    {7.0, 4.0, 6.074148933344916076671745e-2, -3.418775651008326965140985e-2},
    {7.0, 5.0, 5.348712811919512214693790e-2, -3.769690469141021820142313e-2},
    {7.0, 6.0, 4.664649536313750775379430e-2, -3.951692249726245328093426e-2},
    {7.0, 7.0, 4.050164005711468694413373e-2, -4.009058346184079478774217e-2},
    {7.0, 8.0, 3.514407043016440951904071e-2, -3.981002969119666475584046e-2},
    {7.0, 10.0, 2.665549710435691035739361e-2, -3.782342609980730393137038e-2},
    {7.0, 15.0, 1.447397323807575168967112e-2, -3.090213684908457366826207e-2},
    {7.0, 30.0, 4.167705912754353098707916e-3, -1.784274954938831069774585e-2},
    {7.0, 100.0, 3.930652708196194158900617e-4, -5.614659288438632913908877e-3},
    {9.0, 0.0, 6.230772403777468414653749e-2, 0.0},
    {9.0, 0.01, 6.230764938643231740093678e-2, -6.840126315195195212085637e-5},
    {9.0, 0.3, 6.224060847161732606167685e-2, -2.049855497822305879399382e-3},
    {9.0, 0.7, 6.194401878307316992823933e-2, -4.760466516810611685398156e-3},
    {9.0, 1.0, 6.156985072363236855196129e-2, -6.760057837165750130730362e-3},
    {9.0, 1.5, 6.067120105376442439749152e-2, -9.993757717190218979290116e-3},
    {9.0, 2.0, 5.945537668233167604146355e-2, -1.306094463205678324889040e-2},
    {9.0, 3.0, 5.623077704987443588779802e-2, -1.854005795610122397553104e-2},
    {9.0, 4.0, 5.225352990488347758787553e-2, -2.298883403846503952236218e-2},
    {9.0, 5.0, 4.788717155636041181171334e-2, -2.635666251235597793087550e-2},
    {9.0, 6.0, 4.343923409248305818232125e-2, -2.871466475844249205206601e-2},
    {9.0, 7.0, 3.913338645183321486051078e-2, -3.020475588089730915414483e-2},
    {9.0, 8.0, 3.510961982181501681092722e-2, -3.099443362135845809020097e-2},
    {9.0, 10.0, 2.814690069625415202629214e-2, -3.110183968273042894535498e-2},
    {9.0, 15.0, 1.664655310717766465302300e-2, -2.765345842097758880441523e-2},
    {9.0, 30.0, 5.183108340772654625611010e-3, -1.725939510689764246542649e-2},
    {9.0, 100.0, 5.037648918998872084540904e-4, -5.596832365588450571616848e-3},
    {12.0, 0.0, 4.685422101489376261958841e-2, 0.0},
    {12.0, 0.01, 4.685418902809949513279723e-2, -3.877860108408010612800326e-5},
    {12.0, 0.3, 4.682545032343786653109023e-2, -1.162649241666559588202601e-3},
    {12.0, 0.7, 4.669800128514570235053588e-2, -2.705513677748780912568997e-3},
    {12.0, 1.0, 4.653649334221889004386652e-2, -3.851741001287750298907391e-3},
    {12.0, 1.5, 4.614526511352683685544430e-2, -5.729359977495841321655415e-3},
    {12.0, 2.0, 4.560833047934081546792285e-2, -7.550839290000001508206728e-3},
    {12.0, 3.0, 4.414007912647810589515192e-2, -1.096394255298176532505372e-2},
    {12.0, 4.0, 4.223484245869561461955791e-2, -1.399142862558546251671233e-2},
    {12.0, 5.0, 4.001197599345338243976911e-2, -1.657410925763369752897363e-2},
    {12.0, 6.0, 3.759109459839827827747495e-2, -1.869210707066564184135926e-2},
    {12.0, 7.0, 3.507984959961944575996482e-2, -2.035803190718325340881021e-2},
    {12.0, 8.0, 3.256679552851697547519240e-2, -2.160745427657345924904105e-2},
    {12.0, 10.0, 2.778295018759114969601356e-2, -2.305790928782143219614001e-2},
    {12.0, 15.0, 1.838336641704957429814176e-2, -2.291694528020625633304780e-2},
    {12.0, 30.0, 6.492553002589801828353989e-3, -1.621582106858666390256346e-2},
    {12.0, 100.0, 6.675135461195842964941908e-4, -5.562064441452219682601587e-3},
    {20.0, 0.0, 2.817434874105131931864915e-2, 0.0},
    {20.0, 0.01, 2.817434174108586439094311e-2, -1.405217105192130145898367e-5},
    {20.0, 0.3, 2.816805017206193061886006e-2, -4.214712246105874254602525e-4},
    {20.0, 0.7, 2.814009040357348571750494e-2, -9.824591008595133688320933e-4},
    {20.0, 1.0, 2.810452170470271401931541e-2, -1.401743344008484637468173e-3},
    {20.0, 1.5, 2.801772077362010735510461e-2, -2.096137009022844811477674e-3},
    {20.0, 2.0, 2.789709203250070975913175e-2, -2.782845666929041242366358e-3},
    {20.0, 3.0, 2.755806588077808526190546e-2, -4.123662118489807723381889e-3},
    {20.0, 4.0, 2.709697921624161068044379e-2, -5.406441353105272653523184e-3},
    {20.0, 5.0, 2.652625076839558809680685e-2, -6.616041579967259929210039e-3},
    {20.0, 6.0, 2.586039158254768292174439e-2, -7.740411629353184992119717e-3},
    {20.0, 7.0, 2.511515930433069179498644e-2, -8.770817734543120808526348e-3},
    {20.0, 8.0, 2.430674004676612855557904e-2, -9.701829532991510166514741e-3},
    {20.0, 10.0, 2.256301874620927992479956e-2, -1.125902288255072907062452e-2},
    {20.0, 15.0, 1.806037853664849928600895e-2, -1.352364828173512555705589e-2},
    {20.0, 30.0, 8.685747526003926771460684e-3, -1.301859720920566120180476e-2},
    {20.0, 100.0, 1.085128462873797418117733e-3, -5.425120550446401301532721e-3},
    {50.0, 0.0, 1.128153626532377250018381e-2, 0.0},
    {50.0, 0.01, 1.128153581451293474237762e-2, -2.255405541263071491554985e-6},
    {50.0, 0.3, 1.128113055013311201844677e-2, -6.765973659335451143411773e-5},
    {50.0, 0.7, 1.127932772422742415723301e-2, -1.578474993082142644435366e-4},
    {50.0, 1.0, 1.127702995605391080255600e-2, -2.254505089070840313309778e-4},
    {50.0, 1.5, 1.127140212542471066099461e-2, -3.380070631799554150047064e-4},
    {50.0, 2.0, 1.126353258529496128223845e-2, -4.503615536953801693544770e-4},
    {50.0, 3.0, 1.124110856710647891693771e-2, -6.741979610983785776433430e-4},
    {50.0, 4.0, 1.120986440698293622429497e-2, -8.964330681382332164238291e-4},
    {50.0, 5.0, 1.116994744470479148559595e-2, -1.116552800759186975887043e-3},
    {50.0, 6.0, 1.112154413312818035707102e-2, -1.334059546241009191148275e-3},
    {50.0, 7.0, 1.106487789007310238558658e-2, -1.548475759716797099170793e-3},
    {50.0, 8.0, 1.100020656884087186091620e-2, -1.759347252390288489501394e-3},
    {50.0, 10.0, 1.084803486010424299129821e-2, -2.168773259854865881235957e-3},
    {50.0, 15.0, 1.035083045351744284483312e-2, -3.104110501520816356729066e-3},
    {50.0, 30.0, 8.296976845222459125437087e-3, -4.976722555323936699134988e-3},
    {50.0, 100.0, 2.256956946689131775355397e-3, -4.513552760045269579719090e-3},
    {6.123233989613533e-17, -0.999999999, 3.678794419072011887596828e-1, 6.071577059273299256984107e-1},
    {0.19509032182103803, -0.9807852794224452, 3.840528511510195930943297e-1, 4.812072252930578937887013e-1},
    {0.3826834319824064, -0.9238795315874072, 3.975012228617242655697441e-1, 3.823985589837866530109286e-1},
    {0.555570232464032, -0.8314696114710757, 4.078793583021940715900921e-1, 3.007557586676920906374292e-1},
    {0.7071067804794409, -0.7071067804794408, 4.155880962450936175631978e-1, 2.303197875882022409611727e-1},
    {0.8314696114710757, -0.5555702324640319, 4.210973757664865990409436e-1, 1.673037657452804020653405e-1},
    {0.9238795315874072, -0.38268343198240634, 4.247812476917229141700844e-1, 1.091237071843860104198476e-1},
    {0.9807852794224452, -0.19509032182103794, 4.268947788513732118269179e-1, 5.387043566430920568853967e-2},
    {0.999999999, 0.0, 4.275835764290190116220570e-1, 0.0},
    {0.9807852794224452, 0.19509032182103794, 4.268947788513732118269179e-1, -5.387043566430920568853967e-2},
    {0.9238795315874072, 0.38268343198240634, 4.247812476917229141700844e-1, -1.091237071843860104198476e-1},
    {0.8314696114710758, 0.5555702324640318, 4.210973757664865932078873e-1, -1.673037657452803541143440e-1},
    {0.7071067804794409, 0.7071067804794408, 4.155880962450936175631978e-1, -2.303197875882022409611727e-1},
    {0.5555702324640318, 0.8314696114710758, 4.078793583021940722520103e-1, -3.007557586676921864744052e-1},
    {0.3826834319824064, 0.9238795315874072, 3.975012228617242655697441e-1, -3.823985589837866530109286e-1},
    {0.19509032182103822, 0.9807852794224452, 3.840528511510195863705202e-1, -4.812072252930577839009594e-1},
    {6.123233989613533e-17, 0.999999999, 3.678794419072011887596828e-1, -6.071577059273299256984107e-1},
    {6.123233995736766e-17, -1.0, 3.678794411714423268576011e-1, 6.071577058413936840628002e-1},
    {0.19509032201612833, -0.9807852804032304, 3.840528505895466954738522e-1, 4.812072252166592410963277e-1},
    {0.38268343236508984, -0.9238795325112867, 3.975012224085538619456478e-1, 3.823985589233282184699316e-1},
    {0.5555702330196023, -0.8314696123025452, 4.078793579188470424972273e-1, 3.007557586220537890514522e-1},
    {0.7071067811865476, -0.7071067811865475, 4.155880959078486672837559e-1, 2.303197875549106135420392e-1},
    {0.8314696123025452, -0.5555702330196022, 4.210973754597046462489247e-1, 1.673037657221365604037876e-1},
    {0.9238795325112867, -0.3826834323650898, 4.247812474042921244472297e-1, 1.091237071697908512744233e-1},
    {0.9807852804032304, -0.19509032201612825, 4.268947785747048916563582e-1, 5.387043565725352677477552e-2},
    {1.0, 0.0, 4.275835761558070044107503e-1, 0.0},
    {0.9807852804032304, 0.19509032201612825, 4.268947785747048916563582e-1, -5.387043565725352677477552e-2},
    {0.9238795325112867, 0.3826834323650898, 4.247812474042921244472297e-1, -1.091237071697908512744233e-1},
    {0.8314696123025453, 0.5555702330196021, 4.210973754597046404158684e-1, -1.673037657221365124527911e-1},
    {0.7071067811865476, 0.7071067811865475, 4.155880959078486672837559e-1, -2.303197875549106135420392e-1},
    {0.5555702330196021, 0.8314696123025453, 4.078793579188470431591455e-1, -3.007557586220538848884281e-1},
    {0.38268343236508984, 0.9238795325112867, 3.975012224085538619456478e-1, -3.823985589233282184699316e-1},
    {0.19509032201612853, 0.9807852804032304, 3.840528505895466887500428e-1, -4.812072252166591312085859e-1},
    {6.123233995736766e-17, 1.0, 3.678794411714423268576011e-1, -6.071577058413936840628002e-1},
    {6.12323400186e-17, -1.000000001, 3.678794404356833840056332e-1, 6.071577057554574318439070e-1},
    {0.19509032221121866, -0.9807852813840158, 3.840528500280737347374918e-1, 4.812072251402605759356848e-1},
    {0.3826834327477733, -0.9238795334351664, 3.975012219553834098046640e-1, 3.823985588628697966046518e-1},
    {0.5555702335751725, -0.8314696131340149, 4.078793575354999756545751e-1, 3.007557585764155066570494e-1},
    {0.7071067818936544, -0.7071067818936543, 4.155880955706036644477895e-1, 2.303197875216189807391256e-1},
    {0.8314696131340149, -0.5555702335751724, 4.210973751529226669187455e-1, 1.673037656989926975823725e-1},
    {0.9238795334351664, -0.3826834327477732, 4.247812471168613061902667e-1, 1.091237071551956783594977e-1},
    {0.9807852813840158, -0.19509032221121858, 4.268947782980365401356961e-1, 5.387043565019784856511774e-2},
    {1.000000001, 0.0, 4.275835758825949671755599e-1, 0.0},
    {0.9807852813840158, 0.19509032221121858, 4.268947782980365401356961e-1, -5.387043565019784856511774e-2},
    {0.9238795334351664, 0.3826834327477732, 4.247812471168613061902667e-1, -1.091237071551956783594977e-1},
    {0.831469613134015, 0.5555702335751723, 4.210973751529226610856893e-1, -1.673037656989926496313761e-1},
    {0.7071067818936544, 0.7071067818936543, 4.155880955706036644477895e-1, -2.303197875216189807391256e-1},
    {0.5555702335751723, 0.831469613134015, 4.078793575354999763164933e-1, -3.007557585764156024940252e-1},
    {0.3826834327477733, 0.9238795334351664, 3.975012219553834098046640e-1, -3.823985588628697966046518e-1},
    {0.19509032221121886, 0.9807852813840158, 3.840528500280737280136826e-1, -4.812072251402604660479431e-1},
    {6.12323400186e-17, 1.000000001, 3.678794404356833840056332e-1, -6.071577057554574318439070e-1},
    {4.2862637927294727e-16, -6.999999993, 5.095154217859736770118109e-18, 8.144750814820458467834481e-2},
    {1.3656322527472662, -6.865496955957116, 1.620320030580738099496861e-2, 7.974787734196861587067117e-2},
    {2.6787840238768448, -6.46715672111185, 3.162725282530443066470794e-2, 7.476713850972860214251176e-2},
    {3.888991627248225, -5.82028728029753, 4.558853506644427787505942e-2, 6.682941754335520593541615e-2},
    {4.949747463356085, -4.949747463356085, 5.755466221281851755297144e-2, 5.639337002067691444278776e-2},
    {5.82028728029753, -3.888991627248224, 6.715172625044622974405609e-2, 4.397740579449799956305548e-2},
    {6.46715672111185, -2.6787840238768448, 7.414005462652403167324143e-2, 3.010662585221546583452145e-2},
    {6.865496955957116, -1.3656322527472655, 7.837972834049072386602811e-2, 1.528682710349145237436134e-2},
    {6.999999993, 0.0, 7.980005440740177552339335e-2, 0.0},
    {6.865496955957116, 1.3656322527472655, 7.837972834049072386602811e-2, -1.528682710349145237436134e-2},
    {6.46715672111185, 2.6787840238768448, 7.414005462652403167324143e-2, -3.010662585221546583452145e-2},
    {5.8202872802975305, 3.888991627248223, 6.715172625044623484554527e-2, -4.397740579449798622110917e-2},
    {4.949747463356085, 4.949747463356085, 5.755466221281851755297144e-2, -5.639337002067691444278776e-2},
    {3.888991627248223, 5.8202872802975305, 4.558853506644426085784779e-2, -6.682941754335522158226794e-2},
    {2.6787840238768448, 6.46715672111185, 3.162725282530443066470794e-2, -7.476713850972860214251176e-2},
    {1.3656322527472675, 6.865496955957116, 1.620320030580739550826191e-2, -7.974787734196860964432110e-2},
    {4.2862637927294727e-16, 6.999999993, 5.095154217859736770118109e-18, -8.144750814820458467834481e-2},
    {4.286263797015736e-16, -7.0, 5.095154212376961117226924e-18, 8.144750806500296756339810e-2},
    {1.3656322541128982, -6.865496962822613, 1.620320028859825098602781e-2, 7.974787726079583442812754e-2},
    {2.678784026555629, -6.467156727579007, 3.162725279206190174432391e-2, 7.476713843437836195928664e-2},
    {3.888991631137216, -5.820287286117817, 4.558853501922982230102060e-2, 6.682941747694925088357636e-2},
    {4.949747468305833, -4.949747468305832, 5.755466215417686094973253e-2, 5.639336996551195070131071e-2},
    {5.820287286117817, -3.8889916311372152, 6.715172618306776902431727e-2, 4.397740575210841527448283e-2},
    {6.467156727579007, -2.6787840265556286, 7.414005455304550410811050e-2, 3.010662582353862102166049e-2},
    {6.865496962822613, -1.3656322541128978, 7.837972826342431505493445e-2, 1.528682708904163551191440e-2},
    {7.0, 0.0, 7.980005432915293348986450e-2, 0.0},
    {6.865496962822613, 1.3656322541128978, 7.837972826342431505493445e-2, -1.528682708904163551191440e-2},
    {6.467156727579007, 2.6787840265556286, 7.414005455304550410811050e-2, -3.010662582353862102166049e-2},
    {5.820287286117818, 3.8889916311372144, 6.715172618306777412580644e-2, -4.397740575210840193253655e-2},
    {4.949747468305833, 4.949747468305832, 5.755466215417686094973253e-2, -5.639336996551195070131071e-2},
    {3.8889916311372144, 5.820287286117818, 4.558853501922980528380900e-2, -6.682941747694926653042812e-2},
    {2.678784026555629, 6.467156727579007, 3.162725279206190174432391e-2, -7.476713843437836195928664e-2},
    {1.3656322541128998, 6.865496962822613, 1.620320028859826791820329e-2, -7.974787726079582716405246e-2},
    {4.286263797015736e-16, 7.0, 5.095154212376961117226924e-18, -8.144750806500296756339810e-2},
    {4.2862638013020005e-16, -7.000000007000001, 5.095154206894185311226284e-18, 8.144750798180134006351387e-2},
    {1.3656322554785307, -6.8654969696881105, 1.620320027138912170159009e-2, 7.974787717962304140134190e-2},
    {2.678784029234413, -6.467156734046164, 3.162725275881936173055955e-2, 7.476713835902811848740981e-2},
    {3.888991635026208, -5.820287291938104, 4.558853497201536866505583e-2, 6.682941741054329113197504e-2},
    {4.949747473255581, -4.94974747325558, 5.755466209553518373358450e-2, 5.639336991034697747953481e-2},
    {5.820287291938104, -3.888991635026207, 6.715172611568930382897812e-2, 4.397740570971883312610139e-2},
    {6.467156734046164, -2.6787840292344125, 7.414005447956696946686238e-2, 3.010662579486176933260021e-2},
    {6.8654969696881105, -1.36563225547853, 7.837972818635789716132346e-2, 1.528682707459181497012590e-2},
    {7.000000007000001, 0.0, 7.980005425090408167993471e-2, 0.0},
    {6.8654969696881105, 1.36563225547853, 7.837972818635789716132346e-2, -1.528682707459181497012590e-2},
    {6.467156734046164, 2.6787840292344125, 7.414005447956696946686238e-2, -3.010662579486176933260021e-2},
    {5.820287291938105, 3.8889916350262066, 6.715172611568930431960842e-2, -4.397740570971882184426941e-2},
    {4.949747473255581, 4.94974747325558, 5.755466209553518373358450e-2, -5.639336991034697747953481e-2},
    {3.8889916350262066, 5.820287291938105, 4.558853497201535348660140e-2, -6.682941741054330194773526e-2},
    {2.678784029234413, 6.467156734046164, 3.162725275881936173055955e-2, -7.476713835902811848740981e-2},
    {1.365632255478532, 6.8654969696881105, 1.620320027138913621488333e-2, -7.974787717962303517499185e-2},
    {4.2862638013020005e-16, 7.000000007000001, 5.095154206894185311226284e-18, -8.144750798180134006351387e-2},
    {2.0, 3.0, 9.271076642644333399002102e-2, -1.283169622282615753981198e-1},
}};

}  // namespace hegf::golden
