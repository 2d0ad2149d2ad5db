#include "bj/ingest.hpp"

namespace bj {

namespace {

// Copy of data/appendix1.csv; the year_quarter column corrects the source's
// final "2023_Q3" label, which source_label keeps verbatim.
constexpr std::string_view kFixture = R"csv(year_quarter,life_premium,nonlife_premium,total_premium,gdp,life_rate,nonlife_rate,total_rate,source_label
2013_Q1,"103,575,423","203,013,013","306,588,436",28038900000,0.3694%,0.7240%,1.0934%,2013_Q1
2013_Q2,"111,557,839","137,858,957","249,416,796",28715700000,0.3885%,0.4801%,0.8686%,2013_Q2
2013_Q3,"121,279,872","130,855,909","252,135,781",28924800000,0.4193%,0.4524%,0.8717%,2013_Q3
2013_Q4,"132,842,369","100,906,111","233,748,480",32149400000,0.4132%,0.3139%,0.7271%,2013_Q4
2014_Q1,"128,060,078","228,108,375","356,168,453",32301400000,0.3965%,0.7062%,1.1026%,2014_Q1
2014_Q2,"141,180,936","128,938,638","270,119,574",35475400000,0.3980%,0.3635%,0.7614%,2014_Q2
2014_Q3,"149,509,110","145,452,938","294,962,048",40426800000,0.3698%,0.3598%,0.7296%,2014_Q3
2014_Q4,"153,158,105","114,294,570","267,452,675",40924600000,0.3742%,0.2793%,0.6535%,2014_Q4
2015_Q1,"161,174,827","246,501,602","407,676,429",42016200000,0.3836%,0.5867%,0.9703%,2015_Q1
2015_Q2,"177,487,539","195,416,329","372,903,868",44003500000,0.4033%,0.4441%,0.8474%,2015_Q2
2015_Q3,"181,069,501","213,503,006","394,572,507",43680700000,0.4145%,0.4888%,0.9033%,2015_Q3
2015_Q4,"188,757,037","197,325,426","386,082,463",49133400000,0.3842%,0.4016%,0.7858%,2015_Q4
2016_Q1,"186,086,838","331,000,125","517,086,963",53070600000,0.3506%,0.6237%,0.9743%,2016_Q1
2016_Q2,"151,433,272","266,791,486","418,224,758",52440400000,0.2888%,0.5088%,0.7975%,2016_Q2
2016_Q3,"288,932,956","250,770,559","539,703,515",53636200000,0.5387%,0.4675%,1.0062%,2016_Q3
2016_Q4,"225,159,770","222,615,869","447,775,639",59420300000,0.3789%,0.3746%,0.7536%,2016_Q4
2017_Q1,"232,983,398","362,170,136","595,153,534",60905300000,0.3825%,0.5946%,0.9772%,2017_Q1
2017_Q2,"279,683,522","294,209,983","573,893,505",61179200000,0.4572%,0.4809%,0.9381%,2017_Q2
2017_Q3,"228,587,017","296,946,203","525,533,220",65330000000,0.3499%,0.4545%,0.8044%,2017_Q3
2017_Q4,"320,637,820","236,759,996","557,397,816",66361000000,0.4832%,0.3568%,0.8399%,2017_Q4
2018_Q1,"311,385,975","372,296,561","683,682,536",72938600000,0.4269%,0.5104%,0.9373%,2018_Q1
2018_Q2,"328,299,346","333,330,328","661,629,674",67897100000,0.4835%,0.4909%,0.9745%,2018_Q2
2018_Q3,"314,047,824","288,418,734","602,466,558",74147800000,0.4235%,0.3890%,0.8125%,2018_Q3
2018_Q4,"381,934,294","305,242,741","687,177,035",76632800000,0.4984%,0.3983%,0.8967%,2018_Q4
2019_Q1,"379,600,738","445,988,910","825,589,648",82086700000,0.4624%,0.5433%,1.0058%,2019_Q1
2019_Q2,"404,317,452","365,496,534","769,813,986",80556800000,0.5019%,0.4537%,0.9556%,2019_Q2
2019_Q3,"413,630,504","404,981,013","818,611,517",85495600000,0.4838%,0.4737%,0.9575%,2019_Q3
2019_Q4,"451,292,249","342,425,436","793,717,684",87070500000,0.5183%,0.3933%,0.9116%,2019_Q4
2020_Q1,"372,825,543","515,741,117","888,566,660",96590200000,0.3860%,0.5339%,0.9199%,2020_Q1
2020_Q2,"575,397,490","514,426,034","1,089,823,524",85869600000,0.6701%,0.5991%,1.2692%,2020_Q2
2020_Q3,"520,908,274","477,290,554","998,198,828",92699600000,0.5619%,0.5149%,1.0768%,2020_Q3
2020_Q4,"529,659,620","427,280,661","956,940,281",102988500000,0.5143%,0.4149%,0.9292%,2020_Q4
2021_Q1,"482,221,650","578,393,209","1,060,614,859",111105100000,0.4340%,0.5206%,0.9546%,2021_Q1
2021_Q2,"730,339,342","682,541,878","1,412,881,220",97227900000,0.7512%,0.7020%,1.4532%,2021_Q2
2021_Q3,"644,937,301","650,056,842","1,294,994,143",106999400000,0.6027%,0.6075%,1.2103%,2021_Q3
2021_Q4,"655,849,926","450,783,749","1,106,633,675",122642800000,0.5348%,0.3676%,0.9023%,2021_Q4
2022_Q1,"570,334,984","791,989,802","1,362,324,787",135425000000,0.4211%,0.5848%,1.0060%,2022_Q1
2022_Q2,"597,580,096","801,636,568","1,399,216,665",120685100000,0.4952%,0.6642%,1.1594%,2022_Q2
2022_Q3,"1,009,969,356","778,291,916","1,788,261,273",139980600000,0.7215%,0.5560%,1.2775%,2023_Q3
)csv";

}  // namespace

std::string_view fixture_csv() { return kFixture; }

}  // namespace bj
