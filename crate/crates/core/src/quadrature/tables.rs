// Generated by tools/gen_quadrature_tables.py. Do not edit by hand.

/// Gauss-Lobatto rules on [-1, 1] for 2..=16 points: (nodes, weights), weights sum to 2.
pub(crate) static GAUSS_LOBATTO: &[(&[f64], &[f64])] = &[
    (
        &[-1.00000000000000000000, 1.00000000000000000000],
        &[1.00000000000000000000, 1.00000000000000000000],
    ),
    (
        &[-1.00000000000000000000, 8.92958899439277329856e-103, 1.00000000000000000000],
        &[0.333333333333333333333, 1.33333333333333333333, 0.333333333333333333333],
    ),
    (
        &[-1.00000000000000000000, -0.447213595499957939282, 0.447213595499957939282, 1.00000000000000000000],
        &[0.166666666666666666667, 0.833333333333333333333, 0.833333333333333333333, 0.166666666666666666667],
    ),
    (
        &[-1.00000000000000000000, -0.654653670707977143798, -8.92958899439277329856e-103, 0.654653670707977143798, 1.00000000000000000000],
        &[0.100000000000000000000, 0.544444444444444444444, 0.711111111111111111111, 0.544444444444444444444, 0.100000000000000000000],
    ),
    (
        &[-1.00000000000000000000, -0.765055323929464692851, -0.285231516480645096314, 0.285231516480645096314, 0.765055323929464692851, 1.00000000000000000000],
        &[0.0666666666666666666667, 0.378474956297846980317, 0.554858377035486353017, 0.554858377035486353017, 0.378474956297846980317, 0.0666666666666666666667],
    ),
    (
        &[-1.00000000000000000000, -0.830223896278566929872, -0.468848793470714213804, 8.92958899439277329856e-103, 0.468848793470714213804, 0.830223896278566929872, 1.00000000000000000000],
        &[0.0476190476190476190476, 0.276826047361565948011, 0.431745381209862623418, 0.487619047619047619048, 0.431745381209862623418, 0.276826047361565948011, 0.0476190476190476190476],
    ),
    (
        &[-1.00000000000000000000, -0.871740148509606615337, -0.591700181433142302145, -0.209299217902478868769, 0.209299217902478868769, 0.591700181433142302145, 0.871740148509606615337, 1.00000000000000000000],
        &[0.0357142857142857142857, 0.210704227143506039383, 0.341122692483504364764, 0.412458794658703881567, 0.412458794658703881567, 0.341122692483504364764, 0.210704227143506039383, 0.0357142857142857142857],
    ),
    (
        &[-1.00000000000000000000, -0.899757995411460157312, -0.677186279510737753446, -0.363117463826178158711, 0.0, 0.363117463826178158711, 0.677186279510737753446, 0.899757995411460157312, 1.00000000000000000000],
        &[0.0277777777777777777778, 0.165495361560805525046, 0.274538712500161735281, 0.346428510973046345115, 0.371519274376417233560, 0.346428510973046345115, 0.274538712500161735281, 0.165495361560805525046, 0.0277777777777777777778],
    ),
    (
        &[-1.00000000000000000000, -0.919533908166458813829, -0.738773865105505075003, -0.477924949810444495661, -0.165278957666387024626, 0.165278957666387024626, 0.477924949810444495661, 0.738773865105505075003, 0.919533908166458813829, 1.00000000000000000000],
        &[0.0222222222222222222222, 0.133305990851070111126, 0.224889342063126452119, 0.292042683679683757876, 0.327539761183897456657, 0.327539761183897456657, 0.292042683679683757876, 0.224889342063126452119, 0.133305990851070111126, 0.0222222222222222222222],
    ),
    (
        &[-1.00000000000000000000, -0.934001430408059134332, -0.784483473663144418622, -0.565235326996205006471, -0.295758135586939391432, 8.92958899439277329856e-103, 0.295758135586939391432, 0.565235326996205006471, 0.784483473663144418622, 0.934001430408059134332, 1.00000000000000000000],
        &[0.0181818181818181818182, 0.109612273266994864461, 0.187169881780305204108, 0.248048104264028314040, 0.286879124779008088679, 0.300217595455690693786, 0.286879124779008088679, 0.248048104264028314040, 0.187169881780305204108, 0.109612273266994864461, 0.0181818181818181818182],
    ),
    (
        &[-1.00000000000000000000, -0.944899272222882223408, -0.819279321644006678349, -0.632876153031860677662, -0.399530940965348932264, -0.136552932854927554864, 0.136552932854927554864, 0.399530940965348932264, 0.632876153031860677662, 0.819279321644006678349, 0.944899272222882223408, 1.00000000000000000000],
        &[0.0151515151515151515152, 0.0916845174131961306683, 0.157974705564370115165, 0.212508417761021145358, 0.251275603199201280293, 0.271405240910696177000, 0.271405240910696177000, 0.251275603199201280293, 0.212508417761021145358, 0.157974705564370115165, 0.0916845174131961306683, 0.0151515151515151515152],
    ),
    (
        &[-1.00000000000000000000, -0.953309846642163911897, -0.846347564651872316866, -0.686188469081757426073, -0.482909821091336201747, -0.249286930106239992569, 1.78591779887855465971e-102, 0.249286930106239992569, 0.482909821091336201747, 0.686188469081757426073, 0.846347564651872316866, 0.953309846642163911897, 1.00000000000000000000],
        &[0.0128205128205128205128, 0.0778016867468189277936, 0.134981926689608349120, 0.183646865203550092007, 0.220767793566110086086, 0.244015790306676356459, 0.251930849333446736044, 0.244015790306676356459, 0.220767793566110086086, 0.183646865203550092007, 0.134981926689608349120, 0.0778016867468189277936, 0.0128205128205128205128],
    ),
    (
        &[-1.00000000000000000000, -0.959935045267260901355, -0.867801053830347251000, -0.728868599091326140585, -0.550639402928647055317, -0.342724013342712845044, -0.116331868883703867659, 0.116331868883703867659, 0.342724013342712845044, 0.550639402928647055317, 0.728868599091326140585, 0.867801053830347251000, 0.959935045267260901355, 1.00000000000000000000],
        &[0.0109890109890109890110, 0.0668372844976812846341, 0.116586655898711651541, 0.160021851762952142413, 0.194826149373416118640, 0.219126253009770754871, 0.231612794468457058890, 0.231612794468457058890, 0.219126253009770754871, 0.194826149373416118640, 0.160021851762952142413, 0.116586655898711651541, 0.0668372844976812846341, 0.0109890109890109890110],
    ),
    (
        &[-1.00000000000000000000, -0.965245926503838572796, -0.885082044222976298825, -0.763519689951815200704, -0.606253205469845711124, -0.420638054713672480922, -0.215353955363794238226, 0.0, 0.215353955363794238226, 0.420638054713672480922, 0.606253205469845711124, 0.763519689951815200704, 0.885082044222976298825, 0.965245926503838572796, 1.00000000000000000000],
        &[0.00952380952380952380952, 0.0580298930286012490969, 0.101660070325718067604, 0.140511699802428109460, 0.172789647253600949052, 0.196987235964613356093, 0.211973585926820920127, 0.217048116348815649515, 0.211973585926820920127, 0.196987235964613356093, 0.172789647253600949052, 0.140511699802428109460, 0.101660070325718067604, 0.0580298930286012490969, 0.00952380952380952380952],
    ),
    (
        &[-1.00000000000000000000, -0.969568046270217932952, -0.899200533093472092995, -0.792008291861815063931, -0.652388702882493089468, -0.486059421887137611782, -0.299830468900763208098, -0.101326273521949447843, 0.101326273521949447843, 0.299830468900763208098, 0.486059421887137611782, 0.652388702882493089468, 0.792008291861815063931, 0.899200533093472092995, 0.969568046270217932952, 1.00000000000000000000],
        &[0.00833333333333333333333, 0.0508503610059199054032, 0.0893936973259308009911, 0.124255382132514098350, 0.154026980807164280816, 0.177491913391704125301, 0.193690023825203584317, 0.201958308178229871489, 0.201958308178229871489, 0.193690023825203584317, 0.177491913391704125301, 0.154026980807164280816, 0.124255382132514098350, 0.0893936973259308009911, 0.0508503610059199054032, 0.00833333333333333333333],
    ),
];

/// Gauss-Legendre rules on [-1, 1] for 1..=24 points: (nodes, weights), weights sum to 2.
pub(crate) static GAUSS_LEGENDRE: &[(&[f64], &[f64])] = &[
    (
        &[0.0],
        &[2.00000000000000000000],
    ),
    (
        &[-0.577350269189625764509, 0.577350269189625764509],
        &[1.00000000000000000000, 1.00000000000000000000],
    ),
    (
        &[-0.774596669241483377036, 8.92958899439277329856e-103, 0.774596669241483377036],
        &[0.555555555555555555556, 0.888888888888888888889, 0.555555555555555555556],
    ),
    (
        &[-0.861136311594052575224, -0.339981043584856264803, 0.339981043584856264803, 0.861136311594052575224],
        &[0.347854845137453857373, 0.652145154862546142627, 0.652145154862546142627, 0.347854845137453857373],
    ),
    (
        &[-0.906179845938663992798, -0.538469310105683091036, 3.57183559775710931942e-102, 0.538469310105683091036, 0.906179845938663992798],
        &[0.236926885056189087514, 0.478628670499366468041, 0.568888888888888888889, 0.478628670499366468041, 0.236926885056189087514],
    ),
    (
        &[-0.932469514203152027812, -0.661209386466264513661, -0.238619186083196908631, 0.238619186083196908631, 0.661209386466264513661, 0.932469514203152027812],
        &[0.171324492379170345040, 0.360761573048138607570, 0.467913934572691047390, 0.467913934572691047390, 0.360761573048138607570, 0.171324492379170345040],
    ),
    (
        &[-0.949107912342758524526, -0.741531185599394439864, -0.405845151377397166907, 0.0, 0.405845151377397166907, 0.741531185599394439864, 0.949107912342758524526],
        &[0.129484966168869693271, 0.279705391489276667901, 0.381830050505118944950, 0.417959183673469387755, 0.381830050505118944950, 0.279705391489276667901, 0.129484966168869693271],
    ),
    (
        &[-0.960289856497536231684, -0.796666477413626739592, -0.525532409916328985818, -0.183434642495649804939, 0.183434642495649804939, 0.525532409916328985818, 0.796666477413626739592, 0.960289856497536231684],
        &[0.101228536290376259153, 0.222381034453374470544, 0.313706645877887287338, 0.362683783378361982965, 0.362683783378361982965, 0.313706645877887287338, 0.222381034453374470544, 0.101228536290376259153],
    ),
    (
        &[-0.968160239507626089836, -0.836031107326635794299, -0.613371432700590397309, -0.324253423403808929039, -8.92958899439277329856e-103, 0.324253423403808929039, 0.613371432700590397309, 0.836031107326635794299, 0.968160239507626089836],
        &[0.0812743883615744119719, 0.180648160694857404058, 0.260610696402935462319, 0.312347077040002840069, 0.330239355001259763165, 0.312347077040002840069, 0.260610696402935462319, 0.180648160694857404058, 0.0812743883615744119719],
    ),
    (
        &[-0.973906528517171720078, -0.865063366688984510732, -0.679409568299024406234, -0.433395394129247190799, -0.148874338981631210885, 0.148874338981631210885, 0.433395394129247190799, 0.679409568299024406234, 0.865063366688984510732, 0.973906528517171720078],
        &[0.0666713443086881375936, 0.149451349150580593146, 0.219086362515982043996, 0.269266719309996355091, 0.295524224714752870174, 0.295524224714752870174, 0.269266719309996355091, 0.219086362515982043996, 0.149451349150580593146, 0.0666713443086881375936],
    ),
    (
        &[-0.978228658146056992804, -0.887062599768095299075, -0.730152005574049324093, -0.519096129206811815926, -0.269543155952344972332, -1.78591779887855465971e-102, 0.269543155952344972332, 0.519096129206811815926, 0.730152005574049324093, 0.887062599768095299075, 0.978228658146056992804],
        &[0.0556685671161736664828, 0.125580369464904624635, 0.186290210927734251426, 0.233193764591990479919, 0.262804544510246662181, 0.272925086777900630714, 0.262804544510246662181, 0.233193764591990479919, 0.186290210927734251426, 0.125580369464904624635, 0.0556685671161736664828],
    ),
    (
        &[-0.981560634246719250691, -0.904117256370474856678, -0.769902674194304687037, -0.587317954286617447297, -0.367831498998180193753, -0.125233408511468915472, 0.125233408511468915472, 0.367831498998180193753, 0.587317954286617447297, 0.769902674194304687037, 0.904117256370474856678, 0.981560634246719250691],
        &[0.0471753363865118271946, 0.106939325995318430960, 0.160078328543346226335, 0.203167426723065921749, 0.233492536538354808761, 0.249147045813402785001, 0.249147045813402785001, 0.233492536538354808761, 0.203167426723065921749, 0.160078328543346226335, 0.106939325995318430960, 0.0471753363865118271946],
    ),
    (
        &[-0.984183054718588149473, -0.917598399222977965207, -0.801578090733309912794, -0.642349339440340220644, -0.448492751036446852878, -0.230458315955134794066, -8.92958899439277329856e-103, 0.230458315955134794066, 0.448492751036446852878, 0.642349339440340220644, 0.801578090733309912794, 0.917598399222977965207, 0.984183054718588149473],
        &[0.0404840047653158795200, 0.0921214998377284479144, 0.138873510219787238464, 0.178145980761945738280, 0.207816047536888502313, 0.226283180262897238412, 0.232551553230873910195, 0.226283180262897238412, 0.207816047536888502313, 0.178145980761945738280, 0.138873510219787238464, 0.0921214998377284479144, 0.0404840047653158795200],
    ),
    (
        &[-0.986283808696812338842, -0.928434883663573517336, -0.827201315069764993190, -0.687292904811685470148, -0.515248636358154091965, -0.319112368927889760436, -0.108054948707343662066, 0.108054948707343662066, 0.319112368927889760436, 0.515248636358154091965, 0.687292904811685470148, 0.827201315069764993190, 0.928434883663573517336, 0.986283808696812338842],
        &[0.0351194603317518630318, 0.0801580871597602098056, 0.121518570687903184689, 0.157203167158193534570, 0.185538397477937813742, 0.205198463721295603966, 0.215263853463157790196, 0.215263853463157790196, 0.205198463721295603966, 0.185538397477937813742, 0.157203167158193534570, 0.121518570687903184689, 0.0801580871597602098056, 0.0351194603317518630318],
    ),
    (
        &[-0.987992518020485428490, -0.937273392400705904308, -0.848206583410427216201, -0.724417731360170047416, -0.570972172608538847537, -0.394151347077563369897, -0.201194093997434522301, -1.78591779887855465971e-102, 0.201194093997434522301, 0.394151347077563369897, 0.570972172608538847537, 0.724417731360170047416, 0.848206583410427216201, 0.937273392400705904308, 0.987992518020485428490],
        &[0.0307532419961172683546, 0.0703660474881081247093, 0.107159220467171935012, 0.139570677926154314448, 0.166269205816993933553, 0.186161000015562211027, 0.198431485327111576456, 0.202578241925561272881, 0.198431485327111576456, 0.186161000015562211027, 0.166269205816993933553, 0.139570677926154314448, 0.107159220467171935012, 0.0703660474881081247093, 0.0307532419961172683546],
    ),
    (
        &[-0.989400934991649932596, -0.944575023073232576078, -0.865631202387831743880, -0.755404408355003033895, -0.617876244402643748447, -0.458016777657227386342, -0.281603550779258913230, -0.0950125098376374401853, 0.0950125098376374401853, 0.281603550779258913230, 0.458016777657227386342, 0.617876244402643748447, 0.755404408355003033895, 0.865631202387831743880, 0.944575023073232576078, 0.989400934991649932596],
        &[0.0271524594117540948518, 0.0622535239386478928628, 0.0951585116824927848099, 0.124628971255533872052, 0.149595988816576732082, 0.169156519395002538189, 0.182603415044923588867, 0.189450610455068496285, 0.189450610455068496285, 0.182603415044923588867, 0.169156519395002538189, 0.149595988816576732082, 0.124628971255533872052, 0.0951585116824927848099, 0.0622535239386478928628, 0.0271524594117540948518],
    ),
    (
        &[-0.990575475314417335675, -0.950675521768767761223, -0.880239153726985902123, -0.781514003896801406925, -0.657671159216690765850, -0.512690537086476967886, -0.351231763453876315297, -0.178484181495847855851, -1.78591779887855465971e-102, 0.178484181495847855851, 0.351231763453876315297, 0.512690537086476967886, 0.657671159216690765850, 0.781514003896801406925, 0.880239153726985902123, 0.950675521768767761223, 0.990575475314417335675],
        &[0.0241483028685479319601, 0.0554595293739872011294, 0.0850361483171791808835, 0.111883847193403971095, 0.135136368468525473286, 0.154045761076810288081, 0.168004102156450044510, 0.176562705366992646325, 0.179446470356206525458, 0.176562705366992646325, 0.168004102156450044510, 0.154045761076810288081, 0.135136368468525473286, 0.111883847193403971095, 0.0850361483171791808835, 0.0554595293739872011294, 0.0241483028685479319601],
    ),
    (
        &[-0.991565168420930946730, -0.955823949571397755181, -0.892602466497555739206, -0.803704958972523115682, -0.691687043060353207875, -0.559770831073947534608, -0.411751161462842646036, -0.251886225691505509589, -0.0847750130417353012423, 0.0847750130417353012423, 0.251886225691505509589, 0.411751161462842646036, 0.559770831073947534608, 0.691687043060353207875, 0.803704958972523115682, 0.892602466497555739206, 0.955823949571397755181, 0.991565168420930946730],
        &[0.0216160135264833103133, 0.0497145488949697964533, 0.0764257302548890565291, 0.100942044106287165563, 0.122555206711478460185, 0.140642914670650651205, 0.154684675126265244925, 0.164276483745832722986, 0.169142382963143591841, 0.169142382963143591841, 0.164276483745832722986, 0.154684675126265244925, 0.140642914670650651205, 0.122555206711478460185, 0.100942044106287165563, 0.0764257302548890565291, 0.0497145488949697964533, 0.0216160135264833103133],
    ),
    (
        &[-0.992406843843584403189, -0.960208152134830030853, -0.903155903614817901643, -0.822714656537142824979, -0.720966177335229378617, -0.600545304661681023470, -0.464570741375960945717, -0.316564099963629831990, -0.160358645640225375868, -1.78591779887855465971e-102, 0.160358645640225375868, 0.316564099963629831990, 0.464570741375960945717, 0.600545304661681023470, 0.720966177335229378617, 0.822714656537142824979, 0.903155903614817901643, 0.960208152134830030853, 0.992406843843584403189],
        &[0.0194617882297264770363, 0.0448142267656996003328, 0.0690445427376412265807, 0.0914900216224499994645, 0.111566645547333994716, 0.128753962539336227676, 0.142606702173606611776, 0.152766042065859666779, 0.158968843393954347650, 0.161054449848783695979, 0.158968843393954347650, 0.152766042065859666779, 0.142606702173606611776, 0.128753962539336227676, 0.111566645547333994716, 0.0914900216224499994645, 0.0690445427376412265807, 0.0448142267656996003328, 0.0194617882297264770363],
    ),
    (
        &[-0.993128599185094924786, -0.963971927277913791268, -0.912234428251325905868, -0.839116971822218823395, -0.746331906460150792614, -0.636053680726515025453, -0.510867001950827098004, -0.373706088715419560673, -0.227785851141645078080, -0.0765265211334973337546, 0.0765265211334973337546, 0.227785851141645078080, 0.373706088715419560673, 0.510867001950827098004, 0.636053680726515025453, 0.746331906460150792614, 0.839116971822218823395, 0.912234428251325905868, 0.963971927277913791268, 0.993128599185094924786],
        &[0.0176140071391521183119, 0.0406014298003869413310, 0.0626720483341090635695, 0.0832767415767047487248, 0.101930119817240435037, 0.118194531961518417312, 0.131688638449176626898, 0.142096109318382051329, 0.149172986472603746788, 0.152753387130725850698, 0.152753387130725850698, 0.149172986472603746788, 0.142096109318382051329, 0.131688638449176626898, 0.118194531961518417312, 0.101930119817240435037, 0.0832767415767047487248, 0.0626720483341090635695, 0.0406014298003869413310, 0.0176140071391521183119],
    ),
    (
        &[-0.993752170620389500260, -0.967226838566306294317, -0.920099334150400828790, -0.853363364583317283647, -0.768439963475677908616, -0.667138804197412319306, -0.551618835887219807059, -0.424342120207438783574, -0.288021316802401096601, -0.145561854160895090937, -1.78591779887855465971e-102, 0.145561854160895090937, 0.288021316802401096601, 0.424342120207438783574, 0.551618835887219807059, 0.667138804197412319306, 0.768439963475677908616, 0.853363364583317283647, 0.920099334150400828790, 0.967226838566306294317, 0.993752170620389500260],
        &[0.0160172282577743333242, 0.0369537897708524938000, 0.0571344254268572082836, 0.0761001136283793020171, 0.0934444234560338615533, 0.108797299167148377663, 0.121831416053728534195, 0.132268938633337461781, 0.139887394791073154722, 0.144524403989970059064, 0.146081133649690427192, 0.144524403989970059064, 0.139887394791073154722, 0.132268938633337461781, 0.121831416053728534195, 0.108797299167148377663, 0.0934444234560338615533, 0.0761001136283793020171, 0.0571344254268572082836, 0.0369537897708524938000, 0.0160172282577743333242],
    ),
    (
        &[-0.994294585482399292073, -0.970060497835428727124, -0.926956772187174000521, -0.865812577720300136536, -0.787816805979208162004, -0.694487263186682780051, -0.587640403506911592959, -0.469355837986757026406, -0.341935820892084225158, -0.207860426688221285479, -0.0697392733197222212138, 0.0697392733197222212138, 0.207860426688221285479, 0.341935820892084225158, 0.469355837986757026406, 0.587640403506911592959, 0.694487263186682780051, 0.787816805979208162004, 0.865812577720300136536, 0.926956772187174000521, 0.970060497835428727124, 0.994294585482399292073],
        &[0.0146279952982722006850, 0.0337749015848141547933, 0.0522933351526832859403, 0.0697964684245204880950, 0.0859416062170677274144, 0.100414144442880964932, 0.112932296080539218393, 0.123252376810512424286, 0.131173504787062370733, 0.136541498346015171353, 0.139251872855631993375, 0.139251872855631993375, 0.136541498346015171353, 0.131173504787062370733, 0.123252376810512424286, 0.112932296080539218393, 0.100414144442880964932, 0.0859416062170677274144, 0.0697964684245204880950, 0.0522933351526832859403, 0.0337749015848141547933, 0.0146279952982722006850],
    ),
    (
        &[-0.994769334997552123524, -0.972542471218115231956, -0.932971086826016102349, -0.876752358270441667378, -0.804888401618839892151, -0.718661363131950194462, -0.619609875763646156385, -0.509501477846007549690, -0.390301038030290831421, -0.264135680970344930534, -0.133256824298466110932, -3.57183559775710931942e-102, 0.133256824298466110932, 0.264135680970344930534, 0.390301038030290831421, 0.509501477846007549690, 0.619609875763646156385, 0.718661363131950194462, 0.804888401618839892151, 0.876752358270441667378, 0.932971086826016102349, 0.972542471218115231956, 0.994769334997552123524],
        &[0.0134118594871417720813, 0.0309880058569794443107, 0.0480376717310846685716, 0.0642324214085258521272, 0.0792814117767189549229, 0.0929157660600351474770, 0.104892091464541410074, 0.114996640222411364942, 0.123049084306729530468, 0.128905722188082149979, 0.132462039404696617372, 0.133654572186106175351, 0.132462039404696617372, 0.128905722188082149979, 0.123049084306729530468, 0.114996640222411364942, 0.104892091464541410074, 0.0929157660600351474770, 0.0792814117767189549229, 0.0642324214085258521272, 0.0480376717310846685716, 0.0309880058569794443107, 0.0134118594871417720813],
    ),
    (
        &[-0.995187219997021360180, -0.974728555971309498198, -0.938274552002732758524, -0.886415527004401034213, -0.820001985973902921954, -0.740124191578554364244, -0.648093651936975569252, -0.545421471388839535658, -0.433793507626045138487, -0.315042679696163374387, -0.191118867473616309159, -0.0640568928626056260850, 0.0640568928626056260850, 0.191118867473616309159, 0.315042679696163374387, 0.433793507626045138487, 0.545421471388839535658, 0.648093651936975569252, 0.740124191578554364244, 0.820001985973902921954, 0.886415527004401034213, 0.938274552002732758524, 0.974728555971309498198, 0.995187219997021360180],
        &[0.0123412297999871995468, 0.0285313886289336631813, 0.0442774388174198061686, 0.0592985849154367807464, 0.0733464814110803057340, 0.0861901615319532759172, 0.0976186521041138882699, 0.107444270115965634783, 0.115505668053725601353, 0.121670472927803391204, 0.125837456346828296121, 0.127938195346752156974, 0.127938195346752156974, 0.125837456346828296121, 0.121670472927803391204, 0.115505668053725601353, 0.107444270115965634783, 0.0976186521041138882699, 0.0861901615319532759172, 0.0733464814110803057340, 0.0592985849154367807464, 0.0442774388174198061686, 0.0285313886289336631813, 0.0123412297999871995468],
    ),
];

/// Fully symmetric triangle rules: (degree, barycentric nodes, weights summing to 1).
pub(crate) static TRIANGLE: &[(usize, &[[f64; 3]], &[f64])] = &[
    (
        1,
        &[
            [0.333333333333333333333, 0.333333333333333333333, 0.333333333333333333333],
        ],
        &[1.00000000000000000000],
    ),
    (
        2,
        &[
            [0.166666666666666666667, 0.166666666666666666667, 0.666666666666666666667],
            [0.166666666666666666667, 0.666666666666666666667, 0.166666666666666666667],
            [0.666666666666666666667, 0.166666666666666666667, 0.166666666666666666667],
        ],
        &[0.333333333333333333333, 0.333333333333333333333, 0.333333333333333333333],
    ),
    (
        4,
        &[
            [0.445948490915964886318, 0.445948490915964886318, 0.108103018168070227363],
            [0.445948490915964886318, 0.108103018168070227363, 0.445948490915964886318],
            [0.108103018168070227363, 0.445948490915964886318, 0.445948490915964886318],
            [0.0915762135097707434596, 0.0915762135097707434596, 0.816847572980458513081],
            [0.0915762135097707434596, 0.816847572980458513081, 0.0915762135097707434596],
            [0.816847572980458513081, 0.0915762135097707434596, 0.0915762135097707434596],
        ],
        &[0.223381589678011465695, 0.223381589678011465695, 0.223381589678011465695, 0.109951743655321867638, 0.109951743655321867638, 0.109951743655321867638],
    ),
    (
        5,
        &[
            [0.333333333333333333333, 0.333333333333333333333, 0.333333333333333333333],
            [0.470142064105115089770, 0.470142064105115089770, 0.0597158717897698204591],
            [0.470142064105115089770, 0.0597158717897698204591, 0.470142064105115089770],
            [0.0597158717897698204591, 0.470142064105115089770, 0.470142064105115089770],
            [0.101286507323456338801, 0.101286507323456338801, 0.797426985353087322398],
            [0.101286507323456338801, 0.797426985353087322398, 0.101286507323456338801],
            [0.797426985353087322398, 0.101286507323456338801, 0.101286507323456338801],
        ],
        &[0.225000000000000000000, 0.132394152788506180738, 0.132394152788506180738, 0.132394152788506180738, 0.125939180544827152596, 0.125939180544827152596, 0.125939180544827152596],
    ),
    (
        6,
        &[
            [0.249286745170910421292, 0.249286745170910421292, 0.501426509658179157417],
            [0.249286745170910421292, 0.501426509658179157417, 0.249286745170910421292],
            [0.501426509658179157417, 0.249286745170910421292, 0.249286745170910421292],
            [0.0630890144915022283403, 0.0630890144915022283403, 0.873821971016995543319],
            [0.0630890144915022283403, 0.873821971016995543319, 0.0630890144915022283403],
            [0.873821971016995543319, 0.0630890144915022283403, 0.0630890144915022283403],
            [0.636502499121398647230, 0.0531450498448169473532, 0.310352451033784405417],
            [0.636502499121398647230, 0.310352451033784405417, 0.0531450498448169473532],
            [0.0531450498448169473532, 0.636502499121398647230, 0.310352451033784405417],
            [0.0531450498448169473532, 0.310352451033784405417, 0.636502499121398647230],
            [0.310352451033784405417, 0.636502499121398647230, 0.0531450498448169473532],
            [0.310352451033784405417, 0.0531450498448169473532, 0.636502499121398647230],
        ],
        &[0.116786275726379366025, 0.116786275726379366025, 0.116786275726379366025, 0.0508449063702068169209, 0.0508449063702068169209, 0.0508449063702068169209, 0.0828510756183735751936, 0.0828510756183735751936, 0.0828510756183735751936, 0.0828510756183735751936, 0.0828510756183735751936, 0.0828510756183735751936],
    ),
    (
        8,
        &[
            [0.333333333333333333333, 0.333333333333333333333, 0.333333333333333333333],
            [0.0505472283170309754584, 0.0505472283170309754584, 0.898905543365938049083],
            [0.0505472283170309754584, 0.898905543365938049083, 0.0505472283170309754584],
            [0.898905543365938049083, 0.0505472283170309754584, 0.0505472283170309754584],
            [0.459292588292723156029, 0.459292588292723156029, 0.0814148234145536879424],
            [0.459292588292723156029, 0.0814148234145536879424, 0.459292588292723156029],
            [0.0814148234145536879424, 0.459292588292723156029, 0.459292588292723156029],
            [0.170569307751760206622, 0.170569307751760206622, 0.658861384496479586755],
            [0.170569307751760206622, 0.658861384496479586755, 0.170569307751760206622],
            [0.658861384496479586755, 0.170569307751760206622, 0.170569307751760206622],
            [0.728492392955404281241, 0.263112829634638113422, 0.00839477740995760533721],
            [0.728492392955404281241, 0.00839477740995760533721, 0.263112829634638113422],
            [0.263112829634638113422, 0.728492392955404281241, 0.00839477740995760533721],
            [0.263112829634638113422, 0.00839477740995760533721, 0.728492392955404281241],
            [0.00839477740995760533721, 0.728492392955404281241, 0.263112829634638113422],
            [0.00839477740995760533721, 0.263112829634638113422, 0.728492392955404281241],
        ],
        &[0.144315607677787168251, 0.0324584976231980803109, 0.0324584976231980803109, 0.0324584976231980803109, 0.0950916342672846247939, 0.0950916342672846247939, 0.0950916342672846247939, 0.103217370534718250282, 0.103217370534718250282, 0.103217370534718250282, 0.0272303141744349942648, 0.0272303141744349942648, 0.0272303141744349942648, 0.0272303141744349942648, 0.0272303141744349942648, 0.0272303141744349942648],
    ),
    (
        9,
        &[
            [0.333333333333333333333, 0.333333333333333333333, 0.333333333333333333333],
            [0.489682519198737627784, 0.489682519198737627784, 0.0206349616025247444326],
            [0.489682519198737627784, 0.0206349616025247444326, 0.489682519198737627784],
            [0.0206349616025247444326, 0.489682519198737627784, 0.489682519198737627784],
            [0.188203535619032730241, 0.188203535619032730241, 0.623592928761934539518],
            [0.188203535619032730241, 0.623592928761934539518, 0.188203535619032730241],
            [0.623592928761934539518, 0.188203535619032730241, 0.188203535619032730241],
            [0.0447295133944527098651, 0.0447295133944527098651, 0.910540973211094580270],
            [0.0447295133944527098651, 0.910540973211094580270, 0.0447295133944527098651],
            [0.910540973211094580270, 0.0447295133944527098651, 0.0447295133944527098651],
            [0.437089591492936637270, 0.437089591492936637270, 0.125820817014126725460],
            [0.437089591492936637270, 0.125820817014126725460, 0.437089591492936637270],
            [0.125820817014126725460, 0.437089591492936637270, 0.437089591492936637270],
            [0.741198598784498020690, 0.221962989160765695675, 0.0368384120547362836348],
            [0.741198598784498020690, 0.0368384120547362836348, 0.221962989160765695675],
            [0.221962989160765695675, 0.741198598784498020690, 0.0368384120547362836348],
            [0.221962989160765695675, 0.0368384120547362836348, 0.741198598784498020690],
            [0.0368384120547362836348, 0.741198598784498020690, 0.221962989160765695675],
            [0.0368384120547362836348, 0.221962989160765695675, 0.741198598784498020690],
        ],
        &[0.0971357962827988338192, 0.0313347002271390705369, 0.0313347002271390705369, 0.0313347002271390705369, 0.0796477389272102530329, 0.0796477389272102530329, 0.0796477389272102530329, 0.0255776756586980312617, 0.0255776756586980312617, 0.0255776756586980312617, 0.0778275410047742793167, 0.0778275410047742793167, 0.0778275410047742793167, 0.0432835393772893772894, 0.0432835393772893772894, 0.0432835393772893772894, 0.0432835393772893772894, 0.0432835393772893772894, 0.0432835393772893772894],
    ),
    (
        10,
        &[
            [0.933609605831141599238, 0.0337652428984239860938, 0.0326251512704344146686],
            [0.933609605831141599238, 0.0326251512704344146686, 0.0337652428984239860938],
            [0.0337652428984239860938, 0.933609605831141599238, 0.0326251512704344146686],
            [0.0337652428984239860938, 0.0326251512704344146686, 0.933609605831141599238],
            [0.0326251512704344146686, 0.933609605831141599238, 0.0337652428984239860938],
            [0.0326251512704344146686, 0.0337652428984239860938, 0.933609605831141599238],
            [0.802559124013544604398, 0.0337652428984239860938, 0.163675633088031409508],
            [0.802559124013544604398, 0.163675633088031409508, 0.0337652428984239860938],
            [0.0337652428984239860938, 0.802559124013544604398, 0.163675633088031409508],
            [0.0337652428984239860938, 0.163675633088031409508, 0.802559124013544604398],
            [0.163675633088031409508, 0.802559124013544604398, 0.0337652428984239860938],
            [0.163675633088031409508, 0.0337652428984239860938, 0.802559124013544604398],
            [0.598398454203224773232, 0.0337652428984239860938, 0.367836302898351240674],
            [0.598398454203224773232, 0.367836302898351240674, 0.0337652428984239860938],
            [0.0337652428984239860938, 0.598398454203224773232, 0.367836302898351240674],
            [0.0337652428984239860938, 0.367836302898351240674, 0.598398454203224773232],
            [0.367836302898351240674, 0.598398454203224773232, 0.0337652428984239860938],
            [0.367836302898351240674, 0.0337652428984239860938, 0.598398454203224773232],
            [0.367836302898351240674, 0.0337652428984239860938, 0.598398454203224773232],
            [0.367836302898351240674, 0.598398454203224773232, 0.0337652428984239860938],
            [0.0337652428984239860938, 0.367836302898351240674, 0.598398454203224773232],
            [0.0337652428984239860938, 0.598398454203224773232, 0.367836302898351240674],
            [0.598398454203224773232, 0.367836302898351240674, 0.0337652428984239860938],
            [0.598398454203224773232, 0.0337652428984239860938, 0.367836302898351240674],
            [0.163675633088031409508, 0.0337652428984239860938, 0.802559124013544604398],
            [0.163675633088031409508, 0.802559124013544604398, 0.0337652428984239860938],
            [0.0337652428984239860938, 0.163675633088031409508, 0.802559124013544604398],
            [0.0337652428984239860938, 0.802559124013544604398, 0.163675633088031409508],
            [0.802559124013544604398, 0.163675633088031409508, 0.0337652428984239860938],
            [0.802559124013544604398, 0.0337652428984239860938, 0.163675633088031409508],
            [0.0326251512704344146686, 0.0337652428984239860938, 0.933609605831141599238],
            [0.0326251512704344146686, 0.933609605831141599238, 0.0337652428984239860938],
            [0.0337652428984239860938, 0.0326251512704344146686, 0.933609605831141599238],
            [0.0337652428984239860938, 0.933609605831141599238, 0.0326251512704344146686],
            [0.933609605831141599238, 0.0326251512704344146686, 0.0337652428984239860938],
            [0.933609605831141599238, 0.0337652428984239860938, 0.0326251512704344146686],
            [0.802559124013544604398, 0.169395306766867743169, 0.0280455692195876524327],
            [0.802559124013544604398, 0.0280455692195876524327, 0.169395306766867743169],
            [0.169395306766867743169, 0.802559124013544604398, 0.0280455692195876524327],
            [0.169395306766867743169, 0.0280455692195876524327, 0.802559124013544604398],
            [0.0280455692195876524327, 0.802559124013544604398, 0.169395306766867743169],
            [0.0280455692195876524327, 0.169395306766867743169, 0.802559124013544604398],
            [0.689904156420905742281, 0.169395306766867743169, 0.140700536812226514550],
            [0.689904156420905742281, 0.140700536812226514550, 0.169395306766867743169],
            [0.169395306766867743169, 0.689904156420905742281, 0.140700536812226514550],
            [0.169395306766867743169, 0.140700536812226514550, 0.689904156420905742281],
            [0.140700536812226514550, 0.689904156420905742281, 0.169395306766867743169],
            [0.140700536812226514550, 0.169395306766867743169, 0.689904156420905742281],
            [0.514401454544652863478, 0.169395306766867743169, 0.316203238688479393352],
            [0.514401454544652863478, 0.316203238688479393352, 0.169395306766867743169],
            [0.169395306766867743169, 0.514401454544652863478, 0.316203238688479393352],
            [0.169395306766867743169, 0.316203238688479393352, 0.514401454544652863478],
            [0.316203238688479393352, 0.514401454544652863478, 0.169395306766867743169],
            [0.316203238688479393352, 0.169395306766867743169, 0.514401454544652863478],
            [0.316203238688479393352, 0.169395306766867743169, 0.514401454544652863478],
            [0.316203238688479393352, 0.514401454544652863478, 0.169395306766867743169],
            [0.169395306766867743169, 0.316203238688479393352, 0.514401454544652863478],
            [0.169395306766867743169, 0.514401454544652863478, 0.316203238688479393352],
            [0.514401454544652863478, 0.316203238688479393352, 0.169395306766867743169],
            [0.514401454544652863478, 0.169395306766867743169, 0.316203238688479393352],
            [0.140700536812226514550, 0.169395306766867743169, 0.689904156420905742281],
            [0.140700536812226514550, 0.689904156420905742281, 0.169395306766867743169],
            [0.169395306766867743169, 0.140700536812226514550, 0.689904156420905742281],
            [0.169395306766867743169, 0.689904156420905742281, 0.140700536812226514550],
            [0.689904156420905742281, 0.140700536812226514550, 0.169395306766867743169],
            [0.689904156420905742281, 0.169395306766867743169, 0.140700536812226514550],
            [0.0280455692195876524327, 0.169395306766867743169, 0.802559124013544604398],
            [0.0280455692195876524327, 0.802559124013544604398, 0.169395306766867743169],
            [0.169395306766867743169, 0.0280455692195876524327, 0.802559124013544604398],
            [0.169395306766867743169, 0.802559124013544604398, 0.0280455692195876524327],
            [0.802559124013544604398, 0.0280455692195876524327, 0.169395306766867743169],
            [0.802559124013544604398, 0.169395306766867743169, 0.0280455692195876524327],
            [0.598398454203224773232, 0.380690406958401545685, 0.0209111388383736810834],
            [0.598398454203224773232, 0.0209111388383736810834, 0.380690406958401545685],
            [0.380690406958401545685, 0.598398454203224773232, 0.0209111388383736810834],
            [0.380690406958401545685, 0.0209111388383736810834, 0.598398454203224773232],
            [0.0209111388383736810834, 0.598398454203224773232, 0.380690406958401545685],
            [0.0209111388383736810834, 0.380690406958401545685, 0.598398454203224773232],
            [0.514401454544652863478, 0.380690406958401545685, 0.104908138496945590837],
            [0.514401454544652863478, 0.104908138496945590837, 0.380690406958401545685],
            [0.380690406958401545685, 0.514401454544652863478, 0.104908138496945590837],
            [0.380690406958401545685, 0.104908138496945590837, 0.514401454544652863478],
            [0.104908138496945590837, 0.514401454544652863478, 0.380690406958401545685],
            [0.104908138496945590837, 0.380690406958401545685, 0.514401454544652863478],
            [0.383544372033350292625, 0.380690406958401545685, 0.235765221008248161691],
            [0.383544372033350292625, 0.235765221008248161691, 0.380690406958401545685],
            [0.380690406958401545685, 0.383544372033350292625, 0.235765221008248161691],
            [0.380690406958401545685, 0.235765221008248161691, 0.383544372033350292625],
            [0.235765221008248161691, 0.383544372033350292625, 0.380690406958401545685],
            [0.235765221008248161691, 0.380690406958401545685, 0.383544372033350292625],
            [0.235765221008248161691, 0.380690406958401545685, 0.383544372033350292625],
            [0.235765221008248161691, 0.383544372033350292625, 0.380690406958401545685],
            [0.380690406958401545685, 0.235765221008248161691, 0.383544372033350292625],
            [0.380690406958401545685, 0.383544372033350292625, 0.235765221008248161691],
            [0.383544372033350292625, 0.235765221008248161691, 0.380690406958401545685],
            [0.383544372033350292625, 0.380690406958401545685, 0.235765221008248161691],
            [0.104908138496945590837, 0.380690406958401545685, 0.514401454544652863478],
            [0.104908138496945590837, 0.514401454544652863478, 0.380690406958401545685],
            [0.380690406958401545685, 0.104908138496945590837, 0.514401454544652863478],
            [0.380690406958401545685, 0.514401454544652863478, 0.104908138496945590837],
            [0.514401454544652863478, 0.104908138496945590837, 0.380690406958401545685],
            [0.514401454544652863478, 0.380690406958401545685, 0.104908138496945590837],
            [0.0209111388383736810834, 0.380690406958401545685, 0.598398454203224773232],
            [0.0209111388383736810834, 0.598398454203224773232, 0.380690406958401545685],
            [0.380690406958401545685, 0.0209111388383736810834, 0.598398454203224773232],
            [0.380690406958401545685, 0.598398454203224773232, 0.0209111388383736810834],
            [0.598398454203224773232, 0.0209111388383736810834, 0.380690406958401545685],
            [0.598398454203224773232, 0.380690406958401545685, 0.0209111388383736810834],
            [0.367836302898351240674, 0.619309593041598454315, 0.0128541040600503050105],
            [0.367836302898351240674, 0.0128541040600503050105, 0.619309593041598454315],
            [0.619309593041598454315, 0.367836302898351240674, 0.0128541040600503050105],
            [0.619309593041598454315, 0.0128541040600503050105, 0.367836302898351240674],
            [0.0128541040600503050105, 0.367836302898351240674, 0.619309593041598454315],
            [0.0128541040600503050105, 0.619309593041598454315, 0.367836302898351240674],
            [0.316203238688479393352, 0.619309593041598454315, 0.0644871682699221523325],
            [0.316203238688479393352, 0.0644871682699221523325, 0.619309593041598454315],
            [0.619309593041598454315, 0.316203238688479393352, 0.0644871682699221523325],
            [0.619309593041598454315, 0.0644871682699221523325, 0.316203238688479393352],
            [0.0644871682699221523325, 0.316203238688479393352, 0.619309593041598454315],
            [0.0644871682699221523325, 0.619309593041598454315, 0.316203238688479393352],
            [0.235765221008248161691, 0.619309593041598454315, 0.144925185950153383994],
            [0.235765221008248161691, 0.144925185950153383994, 0.619309593041598454315],
            [0.619309593041598454315, 0.235765221008248161691, 0.144925185950153383994],
            [0.619309593041598454315, 0.144925185950153383994, 0.235765221008248161691],
            [0.144925185950153383994, 0.235765221008248161691, 0.619309593041598454315],
            [0.144925185950153383994, 0.619309593041598454315, 0.235765221008248161691],
            [0.144925185950153383994, 0.619309593041598454315, 0.235765221008248161691],
            [0.144925185950153383994, 0.235765221008248161691, 0.619309593041598454315],
            [0.619309593041598454315, 0.144925185950153383994, 0.235765221008248161691],
            [0.619309593041598454315, 0.235765221008248161691, 0.144925185950153383994],
            [0.235765221008248161691, 0.144925185950153383994, 0.619309593041598454315],
            [0.235765221008248161691, 0.619309593041598454315, 0.144925185950153383994],
            [0.0644871682699221523325, 0.619309593041598454315, 0.316203238688479393352],
            [0.0644871682699221523325, 0.316203238688479393352, 0.619309593041598454315],
            [0.619309593041598454315, 0.0644871682699221523325, 0.316203238688479393352],
            [0.619309593041598454315, 0.316203238688479393352, 0.0644871682699221523325],
            [0.316203238688479393352, 0.0644871682699221523325, 0.619309593041598454315],
            [0.316203238688479393352, 0.619309593041598454315, 0.0644871682699221523325],
            [0.0128541040600503050105, 0.619309593041598454315, 0.367836302898351240674],
            [0.0128541040600503050105, 0.367836302898351240674, 0.619309593041598454315],
            [0.619309593041598454315, 0.0128541040600503050105, 0.367836302898351240674],
            [0.619309593041598454315, 0.367836302898351240674, 0.0128541040600503050105],
            [0.367836302898351240674, 0.0128541040600503050105, 0.619309593041598454315],
            [0.367836302898351240674, 0.619309593041598454315, 0.0128541040600503050105],
            [0.163675633088031409508, 0.830604693233132256831, 0.00571967367883633366118],
            [0.163675633088031409508, 0.00571967367883633366118, 0.830604693233132256831],
            [0.830604693233132256831, 0.163675633088031409508, 0.00571967367883633366118],
            [0.830604693233132256831, 0.00571967367883633366118, 0.163675633088031409508],
            [0.00571967367883633366118, 0.163675633088031409508, 0.830604693233132256831],
            [0.00571967367883633366118, 0.830604693233132256831, 0.163675633088031409508],
            [0.140700536812226514550, 0.830604693233132256831, 0.0286947699546412286195],
            [0.140700536812226514550, 0.0286947699546412286195, 0.830604693233132256831],
            [0.830604693233132256831, 0.140700536812226514550, 0.0286947699546412286195],
            [0.830604693233132256831, 0.0286947699546412286195, 0.140700536812226514550],
            [0.0286947699546412286195, 0.140700536812226514550, 0.830604693233132256831],
            [0.0286947699546412286195, 0.830604693233132256831, 0.140700536812226514550],
            [0.104908138496945590837, 0.830604693233132256831, 0.0644871682699221523325],
            [0.104908138496945590837, 0.0644871682699221523325, 0.830604693233132256831],
            [0.830604693233132256831, 0.104908138496945590837, 0.0644871682699221523325],
            [0.830604693233132256831, 0.0644871682699221523325, 0.104908138496945590837],
            [0.0644871682699221523325, 0.104908138496945590837, 0.830604693233132256831],
            [0.0644871682699221523325, 0.830604693233132256831, 0.104908138496945590837],
            [0.0644871682699221523325, 0.830604693233132256831, 0.104908138496945590837],
            [0.0644871682699221523325, 0.104908138496945590837, 0.830604693233132256831],
            [0.830604693233132256831, 0.0644871682699221523325, 0.104908138496945590837],
            [0.830604693233132256831, 0.104908138496945590837, 0.0644871682699221523325],
            [0.104908138496945590837, 0.0644871682699221523325, 0.830604693233132256831],
            [0.104908138496945590837, 0.830604693233132256831, 0.0644871682699221523325],
            [0.0286947699546412286195, 0.830604693233132256831, 0.140700536812226514550],
            [0.0286947699546412286195, 0.140700536812226514550, 0.830604693233132256831],
            [0.830604693233132256831, 0.0286947699546412286195, 0.140700536812226514550],
            [0.830604693233132256831, 0.140700536812226514550, 0.0286947699546412286195],
            [0.140700536812226514550, 0.0286947699546412286195, 0.830604693233132256831],
            [0.140700536812226514550, 0.830604693233132256831, 0.0286947699546412286195],
            [0.00571967367883633366118, 0.830604693233132256831, 0.163675633088031409508],
            [0.00571967367883633366118, 0.163675633088031409508, 0.830604693233132256831],
            [0.830604693233132256831, 0.00571967367883633366118, 0.163675633088031409508],
            [0.830604693233132256831, 0.163675633088031409508, 0.00571967367883633366118],
            [0.163675633088031409508, 0.00571967367883633366118, 0.830604693233132256831],
            [0.163675633088031409508, 0.830604693233132256831, 0.00571967367883633366118],
            [0.0326251512704344146686, 0.966234757101576013906, 0.00114009162798957142529],
            [0.0326251512704344146686, 0.00114009162798957142529, 0.966234757101576013906],
            [0.966234757101576013906, 0.0326251512704344146686, 0.00114009162798957142529],
            [0.966234757101576013906, 0.00114009162798957142529, 0.0326251512704344146686],
            [0.00114009162798957142529, 0.0326251512704344146686, 0.966234757101576013906],
            [0.00114009162798957142529, 0.966234757101576013906, 0.0326251512704344146686],
            [0.0280455692195876524327, 0.966234757101576013906, 0.00571967367883633366118],
            [0.0280455692195876524327, 0.00571967367883633366118, 0.966234757101576013906],
            [0.966234757101576013906, 0.0280455692195876524327, 0.00571967367883633366118],
            [0.966234757101576013906, 0.00571967367883633366118, 0.0280455692195876524327],
            [0.00571967367883633366118, 0.0280455692195876524327, 0.966234757101576013906],
            [0.00571967367883633366118, 0.966234757101576013906, 0.0280455692195876524327],
            [0.0209111388383736810834, 0.966234757101576013906, 0.0128541040600503050105],
            [0.0209111388383736810834, 0.0128541040600503050105, 0.966234757101576013906],
            [0.966234757101576013906, 0.0209111388383736810834, 0.0128541040600503050105],
            [0.966234757101576013906, 0.0128541040600503050105, 0.0209111388383736810834],
            [0.0128541040600503050105, 0.0209111388383736810834, 0.966234757101576013906],
            [0.0128541040600503050105, 0.966234757101576013906, 0.0209111388383736810834],
            [0.0128541040600503050105, 0.966234757101576013906, 0.0209111388383736810834],
            [0.0128541040600503050105, 0.0209111388383736810834, 0.966234757101576013906],
            [0.966234757101576013906, 0.0128541040600503050105, 0.0209111388383736810834],
            [0.966234757101576013906, 0.0209111388383736810834, 0.0128541040600503050105],
            [0.0209111388383736810834, 0.0128541040600503050105, 0.966234757101576013906],
            [0.0209111388383736810834, 0.966234757101576013906, 0.0128541040600503050105],
            [0.00571967367883633366118, 0.966234757101576013906, 0.0280455692195876524327],
            [0.00571967367883633366118, 0.0280455692195876524327, 0.966234757101576013906],
            [0.966234757101576013906, 0.00571967367883633366118, 0.0280455692195876524327],
            [0.966234757101576013906, 0.0280455692195876524327, 0.00571967367883633366118],
            [0.0280455692195876524327, 0.00571967367883633366118, 0.966234757101576013906],
            [0.0280455692195876524327, 0.966234757101576013906, 0.00571967367883633366118],
            [0.00114009162798957142529, 0.966234757101576013906, 0.0326251512704344146686],
            [0.00114009162798957142529, 0.0326251512704344146686, 0.966234757101576013906],
            [0.966234757101576013906, 0.00114009162798957142529, 0.0326251512704344146686],
            [0.966234757101576013906, 0.0326251512704344146686, 0.00114009162798957142529],
            [0.0326251512704344146686, 0.00114009162798957142529, 0.966234757101576013906],
            [0.0326251512704344146686, 0.966234757101576013906, 0.00114009162798957142529],
        ],
        &[0.00236341679343146596202, 0.00236341679343146596202, 0.00236341679343146596202, 0.00236341679343146596202, 0.00236341679343146596202, 0.00236341679343146596202, 0.00497669625823088787738, 0.00497669625823088787738, 0.00497669625823088787738, 0.00497669625823088787738, 0.00497669625823088787738, 0.00497669625823088787738, 0.00645486022163251859577, 0.00645486022163251859577, 0.00645486022163251859577, 0.00645486022163251859577, 0.00645486022163251859577, 0.00645486022163251859577, 0.00645486022163251859577, 0.00645486022163251859577, 0.00645486022163251859577, 0.00645486022163251859577, 0.00645486022163251859577, 0.00645486022163251859577, 0.00497669625823088787738, 0.00497669625823088787738, 0.00497669625823088787738, 0.00497669625823088787738, 0.00497669625823088787738, 0.00497669625823088787738, 0.00236341679343146596202, 0.00236341679343146596202, 0.00236341679343146596202, 0.00236341679343146596202, 0.00236341679343146596202, 0.00236341679343146596202, 0.00427811899592822192809, 0.00427811899592822192809, 0.00427811899592822192809, 0.00427811899592822192809, 0.00427811899592822192809, 0.00427811899592822192809, 0.00900852480124338073136, 0.00900852480124338073136, 0.00900852480124338073136, 0.00900852480124338073136, 0.00900852480124338073136, 0.00900852480124338073136, 0.0116842108454910141793, 0.0116842108454910141793, 0.0116842108454910141793, 0.0116842108454910141793, 0.0116842108454910141793, 0.0116842108454910141793, 0.0116842108454910141793, 0.0116842108454910141793, 0.0116842108454910141793, 0.0116842108454910141793, 0.0116842108454910141793, 0.0116842108454910141793, 0.00900852480124338073136, 0.00900852480124338073136, 0.00900852480124338073136, 0.00900852480124338073136, 0.00900852480124338073136, 0.00900852480124338073136, 0.00427811899592822192809, 0.00427811899592822192809, 0.00427811899592822192809, 0.00427811899592822192809, 0.00427811899592822192809, 0.00427811899592822192809, 0.00413725218185190114207, 0.00413725218185190114207, 0.00413725218185190114207, 0.00413725218185190114207, 0.00413725218185190114207, 0.00413725218185190114207, 0.00871189859952097141088, 0.00871189859952097141088, 0.00871189859952097141088, 0.00871189859952097141088, 0.00871189859952097141088, 0.00871189859952097141088, 0.0112994815851859956058, 0.0112994815851859956058, 0.0112994815851859956058, 0.0112994815851859956058, 0.0112994815851859956058, 0.0112994815851859956058, 0.0112994815851859956058, 0.0112994815851859956058, 0.0112994815851859956058, 0.0112994815851859956058, 0.0112994815851859956058, 0.0112994815851859956058, 0.00871189859952097141088, 0.00871189859952097141088, 0.00871189859952097141088, 0.00871189859952097141088, 0.00871189859952097141088, 0.00871189859952097141088, 0.00413725218185190114207, 0.00413725218185190114207, 0.00413725218185190114207, 0.00413725218185190114207, 0.00413725218185190114207, 0.00413725218185190114207, 0.00254317426129865042361, 0.00254317426129865042361, 0.00254317426129865042361, 0.00254317426129865042361, 0.00254317426129865042361, 0.00254317426129865042361, 0.00535521532444468112014, 0.00535521532444468112014, 0.00535521532444468112014, 0.00535521532444468112014, 0.00535521532444468112014, 0.00535521532444468112014, 0.00694580592875538758003, 0.00694580592875538758003, 0.00694580592875538758003, 0.00694580592875538758003, 0.00694580592875538758003, 0.00694580592875538758003, 0.00694580592875538758003, 0.00694580592875538758003, 0.00694580592875538758003, 0.00694580592875538758003, 0.00694580592875538758003, 0.00694580592875538758003, 0.00535521532444468112014, 0.00535521532444468112014, 0.00535521532444468112014, 0.00535521532444468112014, 0.00535521532444468112014, 0.00535521532444468112014, 0.00254317426129865042361, 0.00254317426129865042361, 0.00254317426129865042361, 0.00254317426129865042361, 0.00254317426129865042361, 0.00254317426129865042361, 0.000872488785103722123361, 0.000872488785103722123361, 0.000872488785103722123361, 0.000872488785103722123361, 0.000872488785103722123361, 0.000872488785103722123361, 0.00183721791443723998366, 0.00183721791443723998366, 0.00183721791443723998366, 0.00183721791443723998366, 0.00183721791443723998366, 0.00183721791443723998366, 0.00238290307847463835176, 0.00238290307847463835176, 0.00238290307847463835176, 0.00238290307847463835176, 0.00238290307847463835176, 0.00238290307847463835176, 0.00238290307847463835176, 0.00238290307847463835176, 0.00238290307847463835176, 0.00238290307847463835176, 0.00238290307847463835176, 0.00238290307847463835176, 0.00183721791443723998366, 0.00183721791443723998366, 0.00183721791443723998366, 0.00183721791443723998366, 0.00183721791443723998366, 0.00183721791443723998366, 0.000872488785103722123361, 0.000872488785103722123361, 0.000872488785103722123361, 0.000872488785103722123361, 0.000872488785103722123361, 0.000872488785103722123361, 8.25900139835671742133e-5, 8.25900139835671742133e-5, 8.25900139835671742133e-5, 8.25900139835671742133e-5, 8.25900139835671742133e-5, 8.25900139835671742133e-5, 0.000173911522801056174068, 0.000173911522801056174068, 0.000173911522801056174068, 0.000173911522801056174068, 0.000173911522801056174068, 0.000173911522801056174068, 0.000225566221518032969911, 0.000225566221518032969911, 0.000225566221518032969911, 0.000225566221518032969911, 0.000225566221518032969911, 0.000225566221518032969911, 0.000225566221518032969911, 0.000225566221518032969911, 0.000225566221518032969911, 0.000225566221518032969911, 0.000225566221518032969911, 0.000225566221518032969911, 0.000173911522801056174068, 0.000173911522801056174068, 0.000173911522801056174068, 0.000173911522801056174068, 0.000173911522801056174068, 0.000173911522801056174068, 8.25900139835671742133e-5, 8.25900139835671742133e-5, 8.25900139835671742133e-5, 8.25900139835671742133e-5, 8.25900139835671742133e-5, 8.25900139835671742133e-5],
    ),
    (
        12,
        &[
            [0.949755413489286612059, 0.0254460438286207377369, 0.0247985426820926502040],
            [0.949755413489286612059, 0.0247985426820926502040, 0.0254460438286207377369],
            [0.0254460438286207377369, 0.949755413489286612059, 0.0247985426820926502040],
            [0.0254460438286207377369, 0.0247985426820926502040, 0.949755413489286612059],
            [0.0247985426820926502040, 0.949755413489286612059, 0.0254460438286207377369],
            [0.0247985426820926502040, 0.0254460438286207377369, 0.949755413489286612059],
            [0.848608053360861206185, 0.0254460438286207377369, 0.125945902810518056078],
            [0.848608053360861206185, 0.125945902810518056078, 0.0254460438286207377369],
            [0.0254460438286207377369, 0.848608053360861206185, 0.125945902810518056078],
            [0.0254460438286207377369, 0.125945902810518056078, 0.848608053360861206185],
            [0.125945902810518056078, 0.848608053360861206185, 0.0254460438286207377369],
            [0.125945902810518056078, 0.0254460438286207377369, 0.848608053360861206185],
            [0.685035977019596981446, 0.0254460438286207377369, 0.289517979151782280817],
            [0.685035977019596981446, 0.289517979151782280817, 0.0254460438286207377369],
            [0.0254460438286207377369, 0.685035977019596981446, 0.289517979151782280817],
            [0.0254460438286207377369, 0.289517979151782280817, 0.685035977019596981446],
            [0.289517979151782280817, 0.685035977019596981446, 0.0254460438286207377369],
            [0.289517979151782280817, 0.0254460438286207377369, 0.685035977019596981446],
            [0.487276978085689631132, 0.0254460438286207377369, 0.487276978085689631132],
            [0.487276978085689631132, 0.487276978085689631132, 0.0254460438286207377369],
            [0.0254460438286207377369, 0.487276978085689631132, 0.487276978085689631132],
            [0.0254460438286207377369, 0.487276978085689631132, 0.487276978085689631132],
            [0.487276978085689631132, 0.487276978085689631132, 0.0254460438286207377369],
            [0.487276978085689631132, 0.0254460438286207377369, 0.487276978085689631132],
            [0.289517979151782280817, 0.0254460438286207377369, 0.685035977019596981446],
            [0.289517979151782280817, 0.685035977019596981446, 0.0254460438286207377369],
            [0.0254460438286207377369, 0.289517979151782280817, 0.685035977019596981446],
            [0.0254460438286207377369, 0.685035977019596981446, 0.289517979151782280817],
            [0.685035977019596981446, 0.289517979151782280817, 0.0254460438286207377369],
            [0.685035977019596981446, 0.0254460438286207377369, 0.289517979151782280817],
            [0.125945902810518056078, 0.0254460438286207377369, 0.848608053360861206185],
            [0.125945902810518056078, 0.848608053360861206185, 0.0254460438286207377369],
            [0.0254460438286207377369, 0.125945902810518056078, 0.848608053360861206185],
            [0.0254460438286207377369, 0.848608053360861206185, 0.125945902810518056078],
            [0.848608053360861206185, 0.125945902810518056078, 0.0254460438286207377369],
            [0.848608053360861206185, 0.0254460438286207377369, 0.125945902810518056078],
            [0.0247985426820926502040, 0.0254460438286207377369, 0.949755413489286612059],
            [0.0247985426820926502040, 0.949755413489286612059, 0.0254460438286207377369],
            [0.0254460438286207377369, 0.0247985426820926502040, 0.949755413489286612059],
            [0.0254460438286207377369, 0.949755413489286612059, 0.0247985426820926502040],
            [0.949755413489286612059, 0.0247985426820926502040, 0.0254460438286207377369],
            [0.949755413489286612059, 0.0254460438286207377369, 0.0247985426820926502040],
            [0.848608053360861206185, 0.129234407200302780068, 0.0221575394388360137470],
            [0.848608053360861206185, 0.0221575394388360137470, 0.129234407200302780068],
            [0.129234407200302780068, 0.848608053360861206185, 0.0221575394388360137470],
            [0.129234407200302780068, 0.0221575394388360137470, 0.848608053360861206185],
            [0.0221575394388360137470, 0.848608053360861206185, 0.129234407200302780068],
            [0.0221575394388360137470, 0.129234407200302780068, 0.848608053360861206185],
            [0.758232717603808110909, 0.129234407200302780068, 0.112532875195889109023],
            [0.758232717603808110909, 0.112532875195889109023, 0.129234407200302780068],
            [0.129234407200302780068, 0.758232717603808110909, 0.112532875195889109023],
            [0.129234407200302780068, 0.112532875195889109023, 0.758232717603808110909],
            [0.112532875195889109023, 0.758232717603808110909, 0.129234407200302780068],
            [0.112532875195889109023, 0.129234407200302780068, 0.758232717603808110909],
            [0.612080793311859659336, 0.129234407200302780068, 0.258684799487837560596],
            [0.612080793311859659336, 0.258684799487837560596, 0.129234407200302780068],
            [0.129234407200302780068, 0.612080793311859659336, 0.258684799487837560596],
            [0.129234407200302780068, 0.258684799487837560596, 0.612080793311859659336],
            [0.258684799487837560596, 0.612080793311859659336, 0.129234407200302780068],
            [0.258684799487837560596, 0.129234407200302780068, 0.612080793311859659336],
            [0.435382796399848609966, 0.129234407200302780068, 0.435382796399848609966],
            [0.435382796399848609966, 0.435382796399848609966, 0.129234407200302780068],
            [0.129234407200302780068, 0.435382796399848609966, 0.435382796399848609966],
            [0.129234407200302780068, 0.435382796399848609966, 0.435382796399848609966],
            [0.435382796399848609966, 0.435382796399848609966, 0.129234407200302780068],
            [0.435382796399848609966, 0.129234407200302780068, 0.435382796399848609966],
            [0.258684799487837560596, 0.129234407200302780068, 0.612080793311859659336],
            [0.258684799487837560596, 0.612080793311859659336, 0.129234407200302780068],
            [0.129234407200302780068, 0.258684799487837560596, 0.612080793311859659336],
            [0.129234407200302780068, 0.612080793311859659336, 0.258684799487837560596],
            [0.612080793311859659336, 0.258684799487837560596, 0.129234407200302780068],
            [0.612080793311859659336, 0.129234407200302780068, 0.258684799487837560596],
            [0.112532875195889109023, 0.129234407200302780068, 0.758232717603808110909],
            [0.112532875195889109023, 0.758232717603808110909, 0.129234407200302780068],
            [0.129234407200302780068, 0.112532875195889109023, 0.758232717603808110909],
            [0.129234407200302780068, 0.758232717603808110909, 0.112532875195889109023],
            [0.758232717603808110909, 0.112532875195889109023, 0.129234407200302780068],
            [0.758232717603808110909, 0.129234407200302780068, 0.112532875195889109023],
            [0.0221575394388360137470, 0.129234407200302780068, 0.848608053360861206185],
            [0.0221575394388360137470, 0.848608053360861206185, 0.129234407200302780068],
            [0.129234407200302780068, 0.0221575394388360137470, 0.848608053360861206185],
            [0.129234407200302780068, 0.848608053360861206185, 0.0221575394388360137470],
            [0.848608053360861206185, 0.0221575394388360137470, 0.129234407200302780068],
            [0.848608053360861206185, 0.129234407200302780068, 0.0221575394388360137470],
            [0.685035977019596981446, 0.297077424311301416547, 0.0178865986691016020077],
            [0.685035977019596981446, 0.0178865986691016020077, 0.297077424311301416547],
            [0.297077424311301416547, 0.685035977019596981446, 0.0178865986691016020077],
            [0.297077424311301416547, 0.0178865986691016020077, 0.685035977019596981446],
            [0.0178865986691016020077, 0.685035977019596981446, 0.297077424311301416547],
            [0.0178865986691016020077, 0.297077424311301416547, 0.685035977019596981446],
            [0.612080793311859659336, 0.297077424311301416547, 0.0908417823768389241174],
            [0.612080793311859659336, 0.0908417823768389241174, 0.297077424311301416547],
            [0.297077424311301416547, 0.612080793311859659336, 0.0908417823768389241174],
            [0.297077424311301416547, 0.0908417823768389241174, 0.612080793311859659336],
            [0.0908417823768389241174, 0.612080793311859659336, 0.297077424311301416547],
            [0.0908417823768389241174, 0.297077424311301416547, 0.612080793311859659336],
            [0.494100147412834188834, 0.297077424311301416547, 0.208822428275864394619],
            [0.494100147412834188834, 0.208822428275864394619, 0.297077424311301416547],
            [0.297077424311301416547, 0.494100147412834188834, 0.208822428275864394619],
            [0.297077424311301416547, 0.208822428275864394619, 0.494100147412834188834],
            [0.208822428275864394619, 0.494100147412834188834, 0.297077424311301416547],
            [0.208822428275864394619, 0.297077424311301416547, 0.494100147412834188834],
            [0.351461287844349291727, 0.297077424311301416547, 0.351461287844349291727],
            [0.351461287844349291727, 0.351461287844349291727, 0.297077424311301416547],
            [0.297077424311301416547, 0.351461287844349291727, 0.351461287844349291727],
            [0.297077424311301416547, 0.351461287844349291727, 0.351461287844349291727],
            [0.351461287844349291727, 0.351461287844349291727, 0.297077424311301416547],
            [0.351461287844349291727, 0.297077424311301416547, 0.351461287844349291727],
            [0.208822428275864394619, 0.297077424311301416547, 0.494100147412834188834],
            [0.208822428275864394619, 0.494100147412834188834, 0.297077424311301416547],
            [0.297077424311301416547, 0.208822428275864394619, 0.494100147412834188834],
            [0.297077424311301416547, 0.494100147412834188834, 0.208822428275864394619],
            [0.494100147412834188834, 0.208822428275864394619, 0.297077424311301416547],
            [0.494100147412834188834, 0.297077424311301416547, 0.208822428275864394619],
            [0.0908417823768389241174, 0.297077424311301416547, 0.612080793311859659336],
            [0.0908417823768389241174, 0.612080793311859659336, 0.297077424311301416547],
            [0.297077424311301416547, 0.0908417823768389241174, 0.612080793311859659336],
            [0.297077424311301416547, 0.612080793311859659336, 0.0908417823768389241174],
            [0.612080793311859659336, 0.0908417823768389241174, 0.297077424311301416547],
            [0.612080793311859659336, 0.297077424311301416547, 0.0908417823768389241174],
            [0.0178865986691016020077, 0.297077424311301416547, 0.685035977019596981446],
            [0.0178865986691016020077, 0.685035977019596981446, 0.297077424311301416547],
            [0.297077424311301416547, 0.0178865986691016020077, 0.685035977019596981446],
            [0.297077424311301416547, 0.685035977019596981446, 0.0178865986691016020077],
            [0.685035977019596981446, 0.0178865986691016020077, 0.297077424311301416547],
            [0.685035977019596981446, 0.297077424311301416547, 0.0178865986691016020077],
            [0.487276978085689631132, 0.500000000000000000000, 0.0127230219143103688685],
            [0.487276978085689631132, 0.0127230219143103688685, 0.500000000000000000000],
            [0.500000000000000000000, 0.487276978085689631132, 0.0127230219143103688685],
            [0.500000000000000000000, 0.0127230219143103688685, 0.487276978085689631132],
            [0.0127230219143103688685, 0.487276978085689631132, 0.500000000000000000000],
            [0.0127230219143103688685, 0.500000000000000000000, 0.487276978085689631132],
            [0.435382796399848609966, 0.500000000000000000000, 0.0646172036001513900340],
            [0.435382796399848609966, 0.0646172036001513900340, 0.500000000000000000000],
            [0.500000000000000000000, 0.435382796399848609966, 0.0646172036001513900340],
            [0.500000000000000000000, 0.0646172036001513900340, 0.435382796399848609966],
            [0.0646172036001513900340, 0.435382796399848609966, 0.500000000000000000000],
            [0.0646172036001513900340, 0.500000000000000000000, 0.435382796399848609966],
            [0.351461287844349291727, 0.500000000000000000000, 0.148538712155650708273],
            [0.351461287844349291727, 0.148538712155650708273, 0.500000000000000000000],
            [0.500000000000000000000, 0.351461287844349291727, 0.148538712155650708273],
            [0.500000000000000000000, 0.148538712155650708273, 0.351461287844349291727],
            [0.148538712155650708273, 0.351461287844349291727, 0.500000000000000000000],
            [0.148538712155650708273, 0.500000000000000000000, 0.351461287844349291727],
            [0.250000000000000000000, 0.500000000000000000000, 0.250000000000000000000],
            [0.250000000000000000000, 0.250000000000000000000, 0.500000000000000000000],
            [0.500000000000000000000, 0.250000000000000000000, 0.250000000000000000000],
            [0.500000000000000000000, 0.250000000000000000000, 0.250000000000000000000],
            [0.250000000000000000000, 0.250000000000000000000, 0.500000000000000000000],
            [0.250000000000000000000, 0.500000000000000000000, 0.250000000000000000000],
            [0.148538712155650708273, 0.500000000000000000000, 0.351461287844349291727],
            [0.148538712155650708273, 0.351461287844349291727, 0.500000000000000000000],
            [0.500000000000000000000, 0.148538712155650708273, 0.351461287844349291727],
            [0.500000000000000000000, 0.351461287844349291727, 0.148538712155650708273],
            [0.351461287844349291727, 0.148538712155650708273, 0.500000000000000000000],
            [0.351461287844349291727, 0.500000000000000000000, 0.148538712155650708273],
            [0.0646172036001513900340, 0.500000000000000000000, 0.435382796399848609966],
            [0.0646172036001513900340, 0.435382796399848609966, 0.500000000000000000000],
            [0.500000000000000000000, 0.0646172036001513900340, 0.435382796399848609966],
            [0.500000000000000000000, 0.435382796399848609966, 0.0646172036001513900340],
            [0.435382796399848609966, 0.0646172036001513900340, 0.500000000000000000000],
            [0.435382796399848609966, 0.500000000000000000000, 0.0646172036001513900340],
            [0.0127230219143103688685, 0.500000000000000000000, 0.487276978085689631132],
            [0.0127230219143103688685, 0.487276978085689631132, 0.500000000000000000000],
            [0.500000000000000000000, 0.0127230219143103688685, 0.487276978085689631132],
            [0.500000000000000000000, 0.487276978085689631132, 0.0127230219143103688685],
            [0.487276978085689631132, 0.0127230219143103688685, 0.500000000000000000000],
            [0.487276978085689631132, 0.500000000000000000000, 0.0127230219143103688685],
            [0.289517979151782280817, 0.702922575688698583453, 0.00755944515951913572922],
            [0.289517979151782280817, 0.00755944515951913572922, 0.702922575688698583453],
            [0.702922575688698583453, 0.289517979151782280817, 0.00755944515951913572922],
            [0.702922575688698583453, 0.00755944515951913572922, 0.289517979151782280817],
            [0.00755944515951913572922, 0.289517979151782280817, 0.702922575688698583453],
            [0.00755944515951913572922, 0.702922575688698583453, 0.289517979151782280817],
            [0.258684799487837560596, 0.702922575688698583453, 0.0383926248234638559507],
            [0.258684799487837560596, 0.0383926248234638559507, 0.702922575688698583453],
            [0.702922575688698583453, 0.258684799487837560596, 0.0383926248234638559507],
            [0.702922575688698583453, 0.0383926248234638559507, 0.258684799487837560596],
            [0.0383926248234638559507, 0.258684799487837560596, 0.702922575688698583453],
            [0.0383926248234638559507, 0.702922575688698583453, 0.258684799487837560596],
            [0.208822428275864394619, 0.702922575688698583453, 0.0882549960354370219274],
            [0.208822428275864394619, 0.0882549960354370219274, 0.702922575688698583453],
            [0.702922575688698583453, 0.208822428275864394619, 0.0882549960354370219274],
            [0.702922575688698583453, 0.0882549960354370219274, 0.208822428275864394619],
            [0.0882549960354370219274, 0.208822428275864394619, 0.702922575688698583453],
            [0.0882549960354370219274, 0.702922575688698583453, 0.208822428275864394619],
            [0.148538712155650708273, 0.702922575688698583453, 0.148538712155650708273],
            [0.148538712155650708273, 0.148538712155650708273, 0.702922575688698583453],
            [0.702922575688698583453, 0.148538712155650708273, 0.148538712155650708273],
            [0.702922575688698583453, 0.148538712155650708273, 0.148538712155650708273],
            [0.148538712155650708273, 0.148538712155650708273, 0.702922575688698583453],
            [0.148538712155650708273, 0.702922575688698583453, 0.148538712155650708273],
            [0.0882549960354370219274, 0.702922575688698583453, 0.208822428275864394619],
            [0.0882549960354370219274, 0.208822428275864394619, 0.702922575688698583453],
            [0.702922575688698583453, 0.0882549960354370219274, 0.208822428275864394619],
            [0.702922575688698583453, 0.208822428275864394619, 0.0882549960354370219274],
            [0.208822428275864394619, 0.0882549960354370219274, 0.702922575688698583453],
            [0.208822428275864394619, 0.702922575688698583453, 0.0882549960354370219274],
            [0.0383926248234638559507, 0.702922575688698583453, 0.258684799487837560596],
            [0.0383926248234638559507, 0.258684799487837560596, 0.702922575688698583453],
            [0.702922575688698583453, 0.0383926248234638559507, 0.258684799487837560596],
            [0.702922575688698583453, 0.258684799487837560596, 0.0383926248234638559507],
            [0.258684799487837560596, 0.0383926248234638559507, 0.702922575688698583453],
            [0.258684799487837560596, 0.702922575688698583453, 0.0383926248234638559507],
            [0.00755944515951913572922, 0.702922575688698583453, 0.289517979151782280817],
            [0.00755944515951913572922, 0.289517979151782280817, 0.702922575688698583453],
            [0.702922575688698583453, 0.00755944515951913572922, 0.289517979151782280817],
            [0.702922575688698583453, 0.289517979151782280817, 0.00755944515951913572922],
            [0.289517979151782280817, 0.00755944515951913572922, 0.702922575688698583453],
            [0.289517979151782280817, 0.702922575688698583453, 0.00755944515951913572922],
            [0.125945902810518056078, 0.870765592799697219932, 0.00328850438978472398994],
            [0.125945902810518056078, 0.00328850438978472398994, 0.870765592799697219932],
            [0.870765592799697219932, 0.125945902810518056078, 0.00328850438978472398994],
            [0.870765592799697219932, 0.00328850438978472398994, 0.125945902810518056078],
            [0.00328850438978472398994, 0.125945902810518056078, 0.870765592799697219932],
            [0.00328850438978472398994, 0.870765592799697219932, 0.125945902810518056078],
            [0.112532875195889109023, 0.870765592799697219932, 0.0167015320044136710452],
            [0.112532875195889109023, 0.0167015320044136710452, 0.870765592799697219932],
            [0.870765592799697219932, 0.112532875195889109023, 0.0167015320044136710452],
            [0.870765592799697219932, 0.0167015320044136710452, 0.112532875195889109023],
            [0.0167015320044136710452, 0.112532875195889109023, 0.870765592799697219932],
            [0.0167015320044136710452, 0.870765592799697219932, 0.112532875195889109023],
            [0.0908417823768389241174, 0.870765592799697219932, 0.0383926248234638559507],
            [0.0908417823768389241174, 0.0383926248234638559507, 0.870765592799697219932],
            [0.870765592799697219932, 0.0908417823768389241174, 0.0383926248234638559507],
            [0.870765592799697219932, 0.0383926248234638559507, 0.0908417823768389241174],
            [0.0383926248234638559507, 0.0908417823768389241174, 0.870765592799697219932],
            [0.0383926248234638559507, 0.870765592799697219932, 0.0908417823768389241174],
            [0.0646172036001513900340, 0.870765592799697219932, 0.0646172036001513900340],
            [0.0646172036001513900340, 0.0646172036001513900340, 0.870765592799697219932],
            [0.870765592799697219932, 0.0646172036001513900340, 0.0646172036001513900340],
            [0.870765592799697219932, 0.0646172036001513900340, 0.0646172036001513900340],
            [0.0646172036001513900340, 0.0646172036001513900340, 0.870765592799697219932],
            [0.0646172036001513900340, 0.870765592799697219932, 0.0646172036001513900340],
            [0.0383926248234638559507, 0.870765592799697219932, 0.0908417823768389241174],
            [0.0383926248234638559507, 0.0908417823768389241174, 0.870765592799697219932],
            [0.870765592799697219932, 0.0383926248234638559507, 0.0908417823768389241174],
            [0.870765592799697219932, 0.0908417823768389241174, 0.0383926248234638559507],
            [0.0908417823768389241174, 0.0383926248234638559507, 0.870765592799697219932],
            [0.0908417823768389241174, 0.870765592799697219932, 0.0383926248234638559507],
            [0.0167015320044136710452, 0.870765592799697219932, 0.112532875195889109023],
            [0.0167015320044136710452, 0.112532875195889109023, 0.870765592799697219932],
            [0.870765592799697219932, 0.0167015320044136710452, 0.112532875195889109023],
            [0.870765592799697219932, 0.112532875195889109023, 0.0167015320044136710452],
            [0.112532875195889109023, 0.0167015320044136710452, 0.870765592799697219932],
            [0.112532875195889109023, 0.870765592799697219932, 0.0167015320044136710452],
            [0.00328850438978472398994, 0.870765592799697219932, 0.125945902810518056078],
            [0.00328850438978472398994, 0.125945902810518056078, 0.870765592799697219932],
            [0.870765592799697219932, 0.00328850438978472398994, 0.125945902810518056078],
            [0.870765592799697219932, 0.125945902810518056078, 0.00328850438978472398994],
            [0.125945902810518056078, 0.00328850438978472398994, 0.870765592799697219932],
            [0.125945902810518056078, 0.870765592799697219932, 0.00328850438978472398994],
            [0.0247985426820926502040, 0.974553956171379262263, 0.000647501146528087532902],
            [0.0247985426820926502040, 0.000647501146528087532902, 0.974553956171379262263],
            [0.974553956171379262263, 0.0247985426820926502040, 0.000647501146528087532902],
            [0.974553956171379262263, 0.000647501146528087532902, 0.0247985426820926502040],
            [0.000647501146528087532902, 0.0247985426820926502040, 0.974553956171379262263],
            [0.000647501146528087532902, 0.974553956171379262263, 0.0247985426820926502040],
            [0.0221575394388360137470, 0.974553956171379262263, 0.00328850438978472398994],
            [0.0221575394388360137470, 0.00328850438978472398994, 0.974553956171379262263],
            [0.974553956171379262263, 0.0221575394388360137470, 0.00328850438978472398994],
            [0.974553956171379262263, 0.00328850438978472398994, 0.0221575394388360137470],
            [0.00328850438978472398994, 0.0221575394388360137470, 0.974553956171379262263],
            [0.00328850438978472398994, 0.974553956171379262263, 0.0221575394388360137470],
            [0.0178865986691016020077, 0.974553956171379262263, 0.00755944515951913572922],
            [0.0178865986691016020077, 0.00755944515951913572922, 0.974553956171379262263],
            [0.974553956171379262263, 0.0178865986691016020077, 0.00755944515951913572922],
            [0.974553956171379262263, 0.00755944515951913572922, 0.0178865986691016020077],
            [0.00755944515951913572922, 0.0178865986691016020077, 0.974553956171379262263],
            [0.00755944515951913572922, 0.974553956171379262263, 0.0178865986691016020077],
            [0.0127230219143103688685, 0.974553956171379262263, 0.0127230219143103688685],
            [0.0127230219143103688685, 0.0127230219143103688685, 0.974553956171379262263],
            [0.974553956171379262263, 0.0127230219143103688685, 0.0127230219143103688685],
            [0.974553956171379262263, 0.0127230219143103688685, 0.0127230219143103688685],
            [0.0127230219143103688685, 0.0127230219143103688685, 0.974553956171379262263],
            [0.0127230219143103688685, 0.974553956171379262263, 0.0127230219143103688685],
            [0.00755944515951913572922, 0.974553956171379262263, 0.0178865986691016020077],
            [0.00755944515951913572922, 0.0178865986691016020077, 0.974553956171379262263],
            [0.974553956171379262263, 0.00755944515951913572922, 0.0178865986691016020077],
            [0.974553956171379262263, 0.0178865986691016020077, 0.00755944515951913572922],
            [0.0178865986691016020077, 0.00755944515951913572922, 0.974553956171379262263],
            [0.0178865986691016020077, 0.974553956171379262263, 0.00755944515951913572922],
            [0.00328850438978472398994, 0.974553956171379262263, 0.0221575394388360137470],
            [0.00328850438978472398994, 0.0221575394388360137470, 0.974553956171379262263],
            [0.974553956171379262263, 0.00328850438978472398994, 0.0221575394388360137470],
            [0.974553956171379262263, 0.0221575394388360137470, 0.00328850438978472398994],
            [0.0221575394388360137470, 0.00328850438978472398994, 0.974553956171379262263],
            [0.0221575394388360137470, 0.974553956171379262263, 0.00328850438978472398994],
            [0.000647501146528087532902, 0.974553956171379262263, 0.0247985426820926502040],
            [0.000647501146528087532902, 0.0247985426820926502040, 0.974553956171379262263],
            [0.974553956171379262263, 0.000647501146528087532902, 0.0247985426820926502040],
            [0.974553956171379262263, 0.0247985426820926502040, 0.000647501146528087532902],
            [0.0247985426820926502040, 0.000647501146528087532902, 0.974553956171379262263],
            [0.0247985426820926502040, 0.974553956171379262263, 0.000647501146528087532902],
        ],
        &[0.00136164325186086526651, 0.00136164325186086526651, 0.00136164325186086526651, 0.00136164325186086526651, 0.00136164325186086526651, 0.00136164325186086526651, 0.00294133728493060997519, 0.00294133728493060997519, 0.00294133728493060997519, 0.00294133728493060997519, 0.00294133728493060997519, 0.00294133728493060997519, 0.00401526391063756541082, 0.00401526391063756541082, 0.00401526391063756541082, 0.00401526391063756541082, 0.00401526391063756541082, 0.00401526391063756541082, 0.00439519211257344562857, 0.00439519211257344562857, 0.00439519211257344562857, 0.00439519211257344562857, 0.00439519211257344562857, 0.00439519211257344562857, 0.00401526391063756541082, 0.00401526391063756541082, 0.00401526391063756541082, 0.00401526391063756541082, 0.00401526391063756541082, 0.00401526391063756541082, 0.00294133728493060997519, 0.00294133728493060997519, 0.00294133728493060997519, 0.00294133728493060997519, 0.00294133728493060997519, 0.00294133728493060997519, 0.00136164325186086526651, 0.00136164325186086526651, 0.00136164325186086526651, 0.00136164325186086526651, 0.00136164325186086526651, 0.00136164325186086526651, 0.00262808979258410032434, 0.00262808979258410032434, 0.00262808979258410032434, 0.00262808979258410032434, 0.00262808979258410032434, 0.00262808979258410032434, 0.00567703653986385013294, 0.00567703653986385013294, 0.00567703653986385013294, 0.00567703653986385013294, 0.00567703653986385013294, 0.00567703653986385013294, 0.00774980824357375093504, 0.00774980824357375093504, 0.00774980824357375093504, 0.00774980824357375093504, 0.00774980824357375093504, 0.00774980824357375093504, 0.00848310268619516110719, 0.00848310268619516110719, 0.00848310268619516110719, 0.00848310268619516110719, 0.00848310268619516110719, 0.00848310268619516110719, 0.00774980824357375093504, 0.00774980824357375093504, 0.00774980824357375093504, 0.00774980824357375093504, 0.00774980824357375093504, 0.00774980824357375093504, 0.00567703653986385013294, 0.00567703653986385013294, 0.00567703653986385013294, 0.00567703653986385013294, 0.00567703653986385013294, 0.00567703653986385013294, 0.00262808979258410032434, 0.00262808979258410032434, 0.00262808979258410032434, 0.00262808979258410032434, 0.00262808979258410032434, 0.00262808979258410032434, 0.00289611430158608889308, 0.00289611430158608889308, 0.00289611430158608889308, 0.00289611430158608889308, 0.00289611430158608889308, 0.00289611430158608889308, 0.00625600645766382004329, 0.00625600645766382004329, 0.00625600645766382004329, 0.00625600645766382004329, 0.00625600645766382004329, 0.00625600645766382004329, 0.00854016881466407392507, 0.00854016881466407392507, 0.00854016881466407392507, 0.00854016881466407392507, 0.00854016881466407392507, 0.00854016881466407392507, 0.00934824794823938000522, 0.00934824794823938000522, 0.00934824794823938000522, 0.00934824794823938000522, 0.00934824794823938000522, 0.00934824794823938000522, 0.00854016881466407392507, 0.00854016881466407392507, 0.00854016881466407392507, 0.00854016881466407392507, 0.00854016881466407392507, 0.00854016881466407392507, 0.00625600645766382004329, 0.00625600645766382004329, 0.00625600645766382004329, 0.00625600645766382004329, 0.00625600645766382004329, 0.00625600645766382004329, 0.00289611430158608889308, 0.00289611430158608889308, 0.00289611430158608889308, 0.00289611430158608889308, 0.00289611430158608889308, 0.00289611430158608889308, 0.00225497628158031574675, 0.00225497628158031574675, 0.00225497628158031574675, 0.00225497628158031574675, 0.00225497628158031574675, 0.00225497628158031574675, 0.00487105987899692700563, 0.00487105987899692700563, 0.00487105987899692700563, 0.00487105987899692700563, 0.00487105987899692700563, 0.00487105987899692700563, 0.00664955734212996257873, 0.00664955734212996257873, 0.00664955734212996257873, 0.00664955734212996257873, 0.00664955734212996257873, 0.00664955734212996257873, 0.00727874496737470498403, 0.00727874496737470498403, 0.00727874496737470498403, 0.00727874496737470498403, 0.00727874496737470498403, 0.00727874496737470498403, 0.00664955734212996257873, 0.00664955734212996257873, 0.00664955734212996257873, 0.00664955734212996257873, 0.00664955734212996257873, 0.00664955734212996257873, 0.00487105987899692700563, 0.00487105987899692700563, 0.00487105987899692700563, 0.00487105987899692700563, 0.00487105987899692700563, 0.00487105987899692700563, 0.00225497628158031574675, 0.00225497628158031574675, 0.00225497628158031574675, 0.00225497628158031574675, 0.00225497628158031574675, 0.00225497628158031574675, 0.00122398996274000551719, 0.00122398996274000551719, 0.00122398996274000551719, 0.00122398996274000551719, 0.00122398996274000551719, 0.00122398996274000551719, 0.00264398718891156135793, 0.00264398718891156135793, 0.00264398718891156135793, 0.00264398718891156135793, 0.00264398718891156135793, 0.00264398718891156135793, 0.00360934680773106643058, 0.00360934680773106643058, 0.00360934680773106643058, 0.00360934680773106643058, 0.00360934680773106643058, 0.00360934680773106643058, 0.00395086673602054515224, 0.00395086673602054515224, 0.00395086673602054515224, 0.00395086673602054515224, 0.00395086673602054515224, 0.00395086673602054515224, 0.00360934680773106643058, 0.00360934680773106643058, 0.00360934680773106643058, 0.00360934680773106643058, 0.00360934680773106643058, 0.00360934680773106643058, 0.00264398718891156135793, 0.00264398718891156135793, 0.00264398718891156135793, 0.00264398718891156135793, 0.00264398718891156135793, 0.00264398718891156135793, 0.00122398996274000551719, 0.00122398996274000551719, 0.00122398996274000551719, 0.00122398996274000551719, 0.00122398996274000551719, 0.00122398996274000551719, 0.000390047136935853206885, 0.000390047136935853206885, 0.000390047136935853206885, 0.000390047136935853206885, 0.000390047136935853206885, 0.000390047136935853206885, 0.000842555629150276920772, 0.000842555629150276920772, 0.000842555629150276920772, 0.000842555629150276920772, 0.000842555629150276920772, 0.000842555629150276920772, 0.00115018540300163046618, 0.00115018540300163046618, 0.00115018540300163046618, 0.00115018540300163046618, 0.00115018540300163046618, 0.00115018540300163046618, 0.00125901707179869290407, 0.00125901707179869290407, 0.00125901707179869290407, 0.00125901707179869290407, 0.00125901707179869290407, 0.00125901707179869290407, 0.00115018540300163046618, 0.00115018540300163046618, 0.00115018540300163046618, 0.00115018540300163046618, 0.00115018540300163046618, 0.00115018540300163046618, 0.000842555629150276920772, 0.000842555629150276920772, 0.000842555629150276920772, 0.000842555629150276920772, 0.000842555629150276920772, 0.000842555629150276920772, 0.000390047136935853206885, 0.000390047136935853206885, 0.000390047136935853206885, 0.000390047136935853206885, 0.000390047136935853206885, 0.000390047136935853206885, 3.55531201185788177983e-5, 3.55531201185788177983e-5, 3.55531201185788177983e-5, 3.55531201185788177983e-5, 3.55531201185788177983e-5, 3.55531201185788177983e-5, 7.67996445893435560435e-5, 7.67996445893435560435e-5, 7.67996445893435560435e-5, 7.67996445893435560435e-5, 7.67996445893435560435e-5, 7.67996445893435560435e-5, 0.000104840353688528999444, 0.000104840353688528999444, 0.000104840353688528999444, 0.000104840353688528999444, 0.000104840353688528999444, 0.000104840353688528999444, 0.000114760450587185864936, 0.000114760450587185864936, 0.000114760450587185864936, 0.000114760450587185864936, 0.000114760450587185864936, 0.000114760450587185864936, 0.000104840353688528999444, 0.000104840353688528999444, 0.000104840353688528999444, 0.000104840353688528999444, 0.000104840353688528999444, 0.000104840353688528999444, 7.67996445893435560435e-5, 7.67996445893435560435e-5, 7.67996445893435560435e-5, 7.67996445893435560435e-5, 7.67996445893435560435e-5, 7.67996445893435560435e-5, 3.55531201185788177983e-5, 3.55531201185788177983e-5, 3.55531201185788177983e-5, 3.55531201185788177983e-5, 3.55531201185788177983e-5, 3.55531201185788177983e-5],
    ),
];
