window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","pipeline.html#the-scanning-pipeline","pipeline.html#stage-by-stage","pipeline.html#exit-codes","normalization.html#normalization-and-type-i-clones","normalization.html#the-line-map","normalization.html#idempotence","matching.html#finding-clone-blocks","matching.html#the-exact-length-rule","matching.html#overlaps-are-reported","matching.html#how-it-searches","ratio.html#clone-ratios","ratio.html#choosing-min_block","ratio.html#sanity-checks","history.html#mining-fix-and-introducing-commits","history.html#locating-the-fixing-commits","history.html#tracing-back-with-blame","window.html#the-vulnerability-window","window.html#filtering-the-corpus","detection-tests.html#detection-tests","detection-tests.html#multiple-snippets","detection-tests.html#on-disk","reports.html#reports","reports.html#the-xml-report","reports.html#determinism","reports.html#the-summary","cli.html#command-line-reference","cli.html#flags","cli.html#a-full-run","cli.html#the-configuration-file","cli.html#file-formats"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":2.8284271247461903},"28":{"tf":1.4142135623730951},"3":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":7,".":{"docs":{},"df":0,"0":{"docs":{"13":{"tf":1.0}},"df":1,"0":{"docs":{},"df":0,"0":{"docs":{"25":{"tf":1.0}},"df":1},"2":{"docs":{"25":{"tf":1.0}},"df":1},"3":{"docs":{"25":{"tf":1.4142135623730951}},"df":1},"4":{"docs":{"25":{"tf":1.0}},"df":1}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"25":{"tf":1.0}},"df":1}}},"6":{"docs":{"11":{"tf":1.0}},"df":1}},"1":{"docs":{"18":{"tf":1.0}},"df":1,"t":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"z":{"docs":{"18":{"tf":2.23606797749979},"30":{"tf":1.0}},"df":2,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"+":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"z":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}},"3":{"docs":{"17":{"tf":1.0},"30":{"tf":1.0}},"df":2},"5":{"docs":{},"df":0,"t":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"z":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}},"6":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2},"7":{"docs":{},"df":0,"t":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"z":{"docs":{"23":{"tf":1.0},"25":{"tf":1.0}},"df":2,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"9":{"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0}},"df":4}},"1":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":2.449489742783178},"28":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":11,".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2}},"0":{"docs":{"11":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"25":{"tf":1.0}},"df":3,"0":{"docs":{"23":{"tf":1.0}},"df":1}},"1":{"docs":{"18":{"tf":1.0}},"df":1,"9":{"docs":{"23":{"tf":1.0}},"df":1}},"2":{"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":3,"3":{"docs":{"23":{"tf":1.0}},"df":1}},"4":{"docs":{},"df":0,"2":{"docs":{},"df":0,"4":{"docs":{},"df":0,"7":{"docs":{"15":{"tf":1.0}},"df":1}}}},"7":{"docs":{},"df":0,"1":{"docs":{},"df":0,"4":{"docs":{},"df":0,"4":{"docs":{"15":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"25":{"tf":1.0}},"df":5,"|":{"docs":{},"df":0,"c":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,")":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"b":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}},"8":{"docs":{},"df":0,"t":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"z":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}},"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"+":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"z":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}},"9":{"docs":{},"df":0,"t":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,":":{"docs":{},"df":0,"2":{"docs":{},"df":0,"9":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"z":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}}}}}}}},"2":{"docs":{"12":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.4142135623730951},"3":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":6,"0":{"docs":{"23":{"tf":1.0}},"df":1,"1":{"docs":{},"df":0,"6":{"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.7320508075688772}},"df":2},"7":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2},"8":{"docs":{"15":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"23":{"tf":1.7320508075688772},"25":{"tf":1.4142135623730951}},"df":7},"9":{"docs":{"18":{"tf":1.0}},"df":1}}}},"3":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"df":6,"3":{"docs":{},"df":0,"3":{"docs":{},"df":0,"9":{"docs":{"30":{"tf":1.4142135623730951}},"df":1}}}},"4":{"docs":{"11":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":5},"5":{"docs":{"23":{"tf":1.0},"25":{"tf":1.0},"29":{"tf":1.0}},"df":3},"6":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"19":{"tf":1.0},"29":{"tf":1.0}},"df":4,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}},"8":{"docs":{"23":{"tf":1.0},"24":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}},"df":5},"a":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"b":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"b":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}},"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":4}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"25":{"tf":1.0}},"df":2}}}}},"t":{"docs":{"0":{"tf":1.0}},"df":1}},"d":{"docs":{"4":{"tf":1.0}},"df":1,"d":{"docs":{"18":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"2":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0},"30":{"tf":1.0}},"df":3}}}}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0},"30":{"tf":1.0}},"df":3}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.4142135623730951}},"df":7}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":12}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"10":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":2}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.4142135623730951},"30":{"tf":1.0}},"df":8,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"28":{"tf":1.4142135623730951}},"df":2}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":6}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"25":{"tf":1.0}},"df":3}}},"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"15":{"tf":1.0},"30":{"tf":1.4142135623730951}},"df":2}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0}},"df":2,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"2":{"docs":{},"df":0,"0":{"docs":{},"df":0,"1":{"docs":{},"df":0,"7":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{"4":{"tf":1.0}},"df":1,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{},"df":0,"m":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"x":{"docs":{},"df":0,"m":{"docs":{},"df":0,"l":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,".":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"c":{"docs":{},"df":0,"3":{"docs":{},"df":0,"3":{"docs":{},"df":0,"3":{"docs":{},"df":0,"9":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"c":{"docs":{},"df":0,"3":{"docs":{},"df":0,"3":{"docs":{},"df":0,"3":{"docs":{},"df":0,"9":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0},"5":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}},"o":{"docs":{"19":{"tf":1.0}},"df":1,"m":{"docs":{"0":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}}},"b":{"docs":{"13":{"tf":1.0},"21":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":2.0}},"df":4,"8":{"docs":{},"df":0,"f":{"docs":{},"df":0,"8":{"docs":{},"df":0,"0":{"docs":{},"df":0,"1":{"docs":{},"df":0,"9":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"2":{"docs":{},"df":0,"c":{"docs":{},"df":0,"5":{"docs":{},"df":0,"a":{"docs":{},"df":0,"3":{"docs":{},"df":0,"4":{"docs":{},"df":0,"7":{"docs":{},"df":0,"d":{"docs":{},"df":0,"7":{"docs":{},"df":0,"7":{"docs":{},"df":0,"c":{"docs":{},"df":0,"b":{"docs":{},"df":0,"1":{"docs":{},"df":0,"a":{"docs":{},"df":0,"9":{"docs":{},"df":0,"4":{"docs":{},"df":0,"4":{"docs":{},"df":0,"f":{"docs":{},"df":0,"2":{"docs":{},"df":0,"c":{"docs":{},"df":0,"9":{"docs":{},"df":0,"3":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"b":{"docs":{},"df":0,"2":{"docs":{},"df":0,"a":{"docs":{},"df":0,"2":{"docs":{},"df":0,"a":{"docs":{},"df":0,"3":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}},"d":{"docs":{"3":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"2":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0}},"df":4}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,")":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,")":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,")":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"26":{"tf":1.0}},"df":4}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"26":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"16":{"tf":2.0},"2":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"k":{"docs":{"19":{"tf":1.0},"5":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.7320508075688772},"12":{"tf":1.0},"13":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":2.23606797749979},"27":{"tf":1.4142135623730951},"4":{"tf":1.0},"8":{"tf":1.0}},"df":9,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"29":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0},"17":{"tf":1.0},"6":{"tf":1.0}},"df":3}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.4142135623730951}},"df":3}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.0}},"df":1}},"d":{"docs":{"16":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"21":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"[":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"[":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"a":{"docs":{},"df":0,"a":{"docs":{},"df":0,"a":{"docs":{},"df":0,"a":{"docs":{},"df":0,"a":{"docs":{},"df":0,"a":{"docs":{},"df":0,"a":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":3},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}},"df":6,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}},"t":{"docs":{"19":{"tf":1.0},"30":{"tf":1.0}},"df":2}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"24":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951}},"df":2}}}},"c":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0},"29":{"tf":1.0}},"df":3,"+":{"docs":{},"df":0,"+":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"18":{"tf":2.0},"2":{"tf":1.0},"21":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0}},"df":7,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}},"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}}}}}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":7}}},"s":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0}},"df":4}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"16":{"tf":1.0},"24":{"tf":1.0},"6":{"tf":1.0}},"df":3}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.7320508075688772},"16":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}}}}}}}}}},"i":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{"4":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"23":{"tf":1.0}},"df":2},"f":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"14":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"8":{"tf":1.0}},"df":13,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"23":{"tf":1.4142135623730951},"26":{"tf":2.449489742783178},"28":{"tf":2.0}},"df":4,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"4":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"v":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{"15":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{},"df":0,"m":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":3}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.4142135623730951},"3":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.7320508075688772},"8":{"tf":1.0}},"df":13,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"29":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}},"e":{"docs":{"15":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"19":{"tf":1.7320508075688772},"30":{"tf":1.4142135623730951},"4":{"tf":2.0}},"df":4}}},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":2.23606797749979},"16":{"tf":2.6457513110645907},"17":{"tf":1.7320508075688772},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"2":{"tf":2.0},"21":{"tf":1.0},"30":{"tf":2.0}},"df":11,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"a":{"docs":{},"df":0,"a":{"docs":{},"df":0,"a":{"docs":{},"df":0,"a":{"docs":{},"df":0,"a":{"docs":{},"df":0,"a":{"docs":{},"df":0,"a":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}},"b":{"docs":{},"df":0,"b":{"docs":{},"df":0,"b":{"docs":{},"df":0,"b":{"docs":{},"df":0,"b":{"docs":{},"df":0,"b":{"docs":{},"df":0,"b":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{"17":{"tf":1.7320508075688772},"18":{"tf":1.7320508075688772}},"df":2}}},"t":{"docs":{"17":{"tf":1.7320508075688772}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.4142135623730951},"27":{"tf":1.0}},"df":2}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.4142135623730951}},"df":1}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"27":{"tf":1.4142135623730951}},"df":1,"u":{"docs":{},"df":0,"r":{"docs":{"27":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"12":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"v":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}},"t":{"docs":{"19":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"11":{"tf":1.4142135623730951},"20":{"tf":1.0},"7":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.4142135623730951}},"df":1}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"27":{"tf":1.0}},"df":8,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{"23":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"5":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"19":{"tf":1.0},"24":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":7}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"16":{"tf":1.0},"18":{"tf":1.4142135623730951}},"df":3}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"23":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"v":{"docs":{"27":{"tf":1.0},"30":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.7320508075688772},"19":{"tf":2.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.7320508075688772},"23":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.7320508075688772}},"df":8,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"28":{"tf":1.7320508075688772},"29":{"tf":1.0}},"df":3}}}}},"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"c":{"docs":{},"df":0,"v":{"docs":{"23":{"tf":1.0}},"df":1}}}},"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":2.23606797749979},"18":{"tf":1.0},"2":{"tf":1.7320508075688772},"26":{"tf":1.0}},"df":5,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"<":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}}}}}},"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{"21":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0},"2":{"tf":1.0}},"df":2},"m":{"docs":{"23":{"tf":1.0}},"df":1},"s":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"18":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.0}},"df":4}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"24":{"tf":1.0}},"df":4}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"26":{"tf":1.0},"29":{"tf":1.0}},"df":4}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{"23":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"30":{"tf":1.0}},"df":4,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"27":{"tf":1.0},"30":{"tf":1.0}},"df":8,"\'":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":8,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":6}}}}}}},"i":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1},"f":{"docs":{"16":{"tf":1.0},"24":{"tf":1.0}},"df":2,"f":{"docs":{"16":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"4":{"tf":1.0}},"df":4}}}},"r":{"docs":{"15":{"tf":1.0},"21":{"tf":1.0},"27":{"tf":2.0}},"df":3,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0},"22":{"tf":1.0},"27":{"tf":1.0},"30":{"tf":1.0}},"df":4}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0}},"df":2,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"c":{"docs":{"29":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":2,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"29":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}}}}}}}}}},"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1,",":{"docs":{},"df":0,"c":{"docs":{"30":{"tf":1.0}},"df":1},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"s":{"docs":{},"df":0,"/":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"30":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"4":{"docs":{},"df":0,"0":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}},".":{"docs":{},"df":0,"g":{"docs":{"29":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.7320508075688772},"10":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":2.0},"20":{"tf":1.0},"26":{"tf":1.0},"30":{"tf":1.0},"5":{"tf":1.0}},"df":11}},"r":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.4142135623730951},"2":{"tf":1.0},"30":{"tf":1.0}},"df":3}}}}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{"12":{"tf":1.0},"24":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}},"df":4}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"5":{"docs":{},"df":0,"0":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{},"df":0,"c":{"docs":{},"df":0,"8":{"docs":{},"df":0,"e":{"docs":{},"df":0,"9":{"docs":{},"df":0,"e":{"docs":{},"df":0,"1":{"docs":{},"df":0,"b":{"docs":{},"df":0,"1":{"docs":{},"df":0,"f":{"docs":{},"df":0,"9":{"docs":{},"df":0,"d":{"docs":{},"df":0,"6":{"docs":{},"df":0,"b":{"docs":{},"df":0,"8":{"docs":{},"df":0,"b":{"docs":{},"df":0,"1":{"docs":{},"df":0,"e":{"docs":{},"df":0,"1":{"docs":{},"df":0,"f":{"docs":{},"df":0,"7":{"docs":{},"df":0,"a":{"docs":{},"df":0,"2":{"docs":{},"df":0,"c":{"docs":{},"df":0,"9":{"docs":{},"df":0,"d":{"docs":{},"df":0,"3":{"docs":{},"df":0,"b":{"docs":{},"df":0,"4":{"docs":{},"df":0,"a":{"docs":{},"df":0,"5":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0},"30":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":3}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"f":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}},"d":{"docs":{"10":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":4,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"1":{"docs":{},"df":0,"1":{"docs":{},"df":0,"9":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"23":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"30":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0},"2":{"tf":1.4142135623730951},"25":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":6}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"20":{"tf":1.0}},"df":2},"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"24":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.0}},"df":5}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":7,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"19":{"tf":1.0},"8":{"tf":1.0}},"df":6}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.0},"2":{"tf":1.0}},"df":4}},"t":{"docs":{"0":{"tf":1.0},"28":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0},"27":{"tf":1.0},"30":{"tf":1.0}},"df":6}},"s":{"docs":{"26":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"2":{"tf":1.0},"27":{"tf":1.0}},"df":3}}}}}}},"f":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0}},"df":4}}}},"l":{"docs":{},"df":0,"s":{"docs":{"8":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":3}}},"l":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":2.23606797749979},"13":{"tf":1.0},"16":{"tf":1.7320508075688772},"19":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":3.4641016151377544},"29":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":18,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"c":{"docs":{},"df":0,"+":{"docs":{},"df":0,"+":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"18":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"28":{"tf":1.0}},"df":8,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.4142135623730951}},"df":3}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1,"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"4":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1}},"d":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":8,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0},"9":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":2}}},"t":{"docs":{"0":{"tf":1.0}},"df":1},"x":{"docs":{"0":{"tf":3.1622776601683795},"1":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":3.1622776601683795},"17":{"tf":2.0},"18":{"tf":2.0},"19":{"tf":2.0},"2":{"tf":3.0},"20":{"tf":2.0},"22":{"tf":1.0},"23":{"tf":1.7320508075688772},"25":{"tf":1.7320508075688772},"28":{"tf":1.0},"30":{"tf":1.4142135623730951}},"df":15,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}},"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"1":{"tf":1.0},"17":{"tf":1.7320508075688772}},"df":2}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"27":{"tf":1.4142135623730951},"29":{"tf":1.0}},"df":3},"w":{"docs":{"0":{"tf":1.7320508075688772},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"30":{"tf":1.0},"8":{"tf":1.0}},"df":8}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}},"n":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.7320508075688772},"19":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":12},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"23":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0}},"df":1},"e":{"docs":{},"df":0,"v":{"docs":{"19":{"tf":1.0}},"df":1}},"k":{"docs":{"0":{"tf":2.8284271247461903},"11":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":2.449489742783178},"2":{"tf":1.4142135623730951},"23":{"tf":1.0},"25":{"tf":2.23606797749979},"26":{"tf":1.0},"30":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":10,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"30":{"tf":1.0}},"df":2}}}},"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"’":{"docs":{"0":{"tf":1.0}},"df":1}},"m":{"docs":{"11":{"tf":1.0},"6":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"4":{"tf":1.0}},"df":2,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"/":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"/":{"docs":{},"df":0,"{":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}},"r":{"docs":{},"df":0,"1":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"r":{"docs":{},"df":0,"2":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"{":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"}":{"docs":{},"df":0,"u":{"docs":{},"df":0,"1":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"2":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"3":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"4":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.4142135623730951}},"df":1}},"r":{"docs":{"1":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"21":{"tf":1.0}},"df":1,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":2.23606797749979},"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"26":{"tf":1.0},"30":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":7}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,")":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":4}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}},"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0}},"df":2},"f":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.0}},"df":3},"v":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2,"n":{"docs":{"0":{"tf":1.0},"30":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"w":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"8":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"6":{"tf":1.0}},"df":3}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"h":{"docs":{"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"30":{"tf":1.0}},"df":4,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}},"y":{"docs":{"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":2,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"30":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.7320508075688772},"14":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0}},"df":4}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.4142135623730951},"25":{"tf":1.0}},"df":2,",":{"docs":{},"df":0,"c":{"docs":{},"df":0,"+":{"docs":{},"df":0,"+":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{},"df":0,"0":{"docs":{},"df":0,"1":{"docs":{},"df":0,"7":{"docs":{"30":{"tf":1.0}},"df":1}}}}}}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"s":{"docs":{},"df":0,"/":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"30":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"p":{"docs":{},"df":0,":":{"docs":{},"df":0,"/":{"docs":{},"df":0,"/":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.7320508075688772}},"df":1}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0}},"df":4}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}},"k":{"docs":{"16":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,".":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"d":{"docs":{"10":{"tf":1.0},"15":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"21":{"tf":1.0},"30":{"tf":1.0}},"df":6,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"24":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"f":{"docs":{"17":{"tf":1.0}},"df":1,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{"4":{"tf":1.0}},"df":1,"i":{"docs":{"4":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"c":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"2":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":3},"s":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}},"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"24":{"tf":1.0}},"df":1}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0}},"df":5}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":2.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"18":{"tf":1.4142135623730951},"29":{"tf":1.0}},"df":3}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}},"t":{"docs":{"4":{"tf":2.0}},"df":1,"e":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"o":{"docs":{"17":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"17":{"tf":1.7320508075688772}},"df":2}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.7320508075688772},"30":{"tf":1.0}},"df":7,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"15":{"tf":2.8284271247461903},"2":{"tf":1.7320508075688772},"27":{"tf":1.7320508075688772},"28":{"tf":1.0},"30":{"tf":1.0}},"df":7,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0},"30":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"28":{"tf":1.0},"29":{"tf":1.0}},"df":2}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{"19":{"tf":1.4142135623730951}},"df":1}}}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0}},"df":4}}}}}},"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{"24":{"tf":1.7320508075688772},"27":{"tf":1.0},"28":{"tf":1.0}},"df":3},"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.4142135623730951},"30":{"tf":1.7320508075688772}},"df":7}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}},"k":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"27":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":3}},"y":{"docs":{},"df":0,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0},"2":{"tf":1.0},"27":{"tf":1.4142135623730951}},"df":3}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"12":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"–":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"–":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"15":{"tf":2.0},"2":{"tf":1.0},"30":{"tf":1.4142135623730951}},"df":4}}},"n":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0},"2":{"tf":1.0}},"df":2},"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"19":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"29":{"tf":1.4142135623730951}},"df":5,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}}},"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"2":{"tf":1.0},"27":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}},"s":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"30":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":2.23606797749979},"10":{"tf":2.0},"11":{"tf":2.23606797749979},"12":{"tf":1.7320508075688772},"13":{"tf":1.0},"16":{"tf":2.0},"19":{"tf":2.0},"21":{"tf":2.23606797749979},"30":{"tf":1.4142135623730951},"4":{"tf":2.23606797749979},"5":{"tf":2.6457513110645907},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":14,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"29":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1,"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"2":{"docs":{},"df":0,"0":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"k":{"docs":{"15":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.0},"30":{"tf":1.0}},"df":2}},"v":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0}},"df":1},"t":{"docs":{"0":{"tf":1.0},"23":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{"0":{"tf":1.0}},"df":1},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":2,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0},"30":{"tf":1.0}},"df":2}}}}}}}},"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":12,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"k":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.0}},"df":3}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"30":{"tf":1.0}},"df":7,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"1":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}},"df":3}}}},"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"29":{"tf":1.0}},"df":1}}}}},"’":{"docs":{"30":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}},"p":{"docs":{"10":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":2,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"m":{"docs":{"9":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.4142135623730951},"30":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"15":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":2.23606797749979},"23":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":11,"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"v":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}},"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.0}},"df":6,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"26":{"tf":1.0}},"df":4}}}},"r":{"docs":{},"df":0,"g":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":2}},"i":{"docs":{"4":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{"27":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":2.23606797749979},"29":{"tf":1.0}},"df":3}}}}}},"e":{"docs":{"2":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0},"27":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}},"s":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":3}},"x":{"docs":{"21":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1,"l":{"docs":{"18":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{"24":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"27":{"tf":1.0}},"df":4}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":3}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}}}}},"n":{"docs":{"0":{"tf":1.0},"27":{"tf":1.7320508075688772}},"df":2,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":2,",":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,",":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,",":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{"30":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}},".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"23":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1,"l":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":3,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"12":{"tf":1.4142135623730951},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0}},"df":7}}},"w":{"docs":{"16":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.0}},"df":1,"i":{"docs":{"17":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"19":{"tf":2.0},"2":{"tf":1.0},"21":{"tf":2.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":2.23606797749979},"7":{"tf":1.0}},"df":10,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":6,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":8}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}},"f":{"docs":{"6":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}},"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.4142135623730951}},"df":3}}}}}}},"e":{"docs":{"4":{"tf":1.0}},"df":1,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"h":{"docs":{"12":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":7},"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951}},"df":3}}}}}},"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1,"r":{"docs":{"10":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}},"k":{"docs":{"15":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":2}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}},"n":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":2.23606797749979},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"28":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":16,"c":{"docs":{"11":{"tf":1.0},"19":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"28":{"tf":1.0},"3":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{"29":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"30":{"tf":1.4142135623730951}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0},"19":{"tf":1.7320508075688772},"21":{"tf":1.4142135623730951},"30":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":5,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":2.8284271247461903},"29":{"tf":1.0},"4":{"tf":1.0}},"df":5,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0}},"df":5,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"24":{"tf":1.0},"26":{"tf":1.0}},"df":5,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"27":{"tf":1.0},"29":{"tf":1.0}},"df":2}}}}}}},"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"19":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0}},"df":3}}}},"i":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"29":{"tf":1.0}},"df":3}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":2.0},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}},"df":9,"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}}}}},"s":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}},"t":{"docs":{"20":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}},"s":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1}}}}}},"h":{"docs":{"15":{"tf":1.0},"21":{"tf":1.0},"30":{"tf":1.0}},"df":3,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0},"2":{"tf":1.0},"27":{"tf":1.0}},"df":3}}}}},"u":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"15":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"23":{"tf":1.4142135623730951},"30":{"tf":1.0}},"df":7,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0},"18":{"tf":1.4142135623730951}},"df":2}},"n":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0}},"df":4},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"26":{"tf":1.0}},"df":2}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2}}},"u":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0}},"df":3}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"24":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.4142135623730951}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"23":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"3":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"22":{"tf":1.0},"24":{"tf":1.0}},"df":2}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.7320508075688772},"19":{"tf":1.0},"21":{"tf":1.4142135623730951},"29":{"tf":1.0},"6":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":7}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"11":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"20":{"tf":1.7320508075688772},"23":{"tf":2.23606797749979},"25":{"tf":1.7320508075688772},"27":{"tf":1.0},"28":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":13,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"l":{"docs":{"18":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.7320508075688772}},"df":1}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"’":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"30":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"30":{"tf":1.0}},"df":1}}}}}}}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0},"30":{"tf":1.0}},"df":3}}}}},"l":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}},"r":{"docs":{"15":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0}},"df":4,"\\"":{"docs":{},"df":0,"(":{"docs":{},"df":0,"?":{"docs":{},"df":0,"i":{"docs":{},"df":0,")":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"b":{"docs":{},"df":0,"(":{"docs":{},"df":0,"?":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"v":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}},"#":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"26":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951}},"df":5,"(":{"docs":{},"df":0,"a":{"docs":{"13":{"tf":1.0}},"df":1},"b":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"w":{"docs":{"19":{"tf":1.0},"21":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}},"df":4}},"e":{"docs":{"1":{"tf":1.0},"21":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0},"2":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1}}}},"l":{"docs":{"12":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":2.0},"12":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"27":{"tf":1.0},"30":{"tf":1.0}},"df":6,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0}},"df":1}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}},"l":{"docs":{"30":{"tf":1.4142135623730951}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"30":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2},"v":{"docs":{"4":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}},"o":{"docs":{"15":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.4142135623730951}},"df":4,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"27":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":15,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0}},"df":3}}},"x":{"docs":{},"df":0,"m":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"27":{"tf":1.0},"30":{"tf":1.0}},"df":4},"y":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"/":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"/":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"’":{"docs":{"18":{"tf":1.0},"2":{"tf":1.0},"30":{"tf":1.0}},"df":3}}}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"2":{"tf":1.4142135623730951},"30":{"tf":1.0}},"df":5}}},"t":{"docs":{"0":{"tf":1.0}},"df":1,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"24":{"tf":1.0}},"df":6}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.4142135623730951}},"df":4}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"15":{"tf":1.0}},"df":1}},"s":{"docs":{"16":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"f":{"docs":{},"df":0,"c":{"docs":{"30":{"tf":1.4142135623730951}},"df":1}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0}},"df":1}}},"w":{"docs":{"30":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"8":{"tf":1.0}},"df":4}},"n":{"docs":{"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"2":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":9}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.4142135623730951},"21":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}}}}}}},"1":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"2":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"3":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"4":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"5":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"6":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}},"m":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":5}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.4142135623730951}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.7320508075688772},"10":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.7320508075688772},"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.4142135623730951},"3":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":16,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"22":{"tf":1.0}},"df":1,"/":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"x":{"docs":{},"df":0,"s":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"15":{"tf":1.7320508075688772},"2":{"tf":1.0}},"df":2}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"e":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":6,"n":{"docs":{},"df":0,"\\\\":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2,"o":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}}}}},"f":{"docs":{"12":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}},"t":{"docs":{"16":{"tf":1.7320508075688772},"17":{"tf":2.0},"2":{"tf":1.4142135623730951},"23":{"tf":1.7320508075688772},"24":{"tf":1.4142135623730951},"29":{"tf":1.4142135623730951}},"df":6,"u":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1},"r":{"docs":{"11":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"17":{"tf":1.0},"27":{"tf":1.0}},"df":5}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}},"p":{"docs":{"23":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0}},"df":3}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0}},"df":3}}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}},"t":{"docs":{"1":{"tf":1.0},"19":{"tf":1.0}},"df":2},"x":{"docs":{"19":{"tf":1.4142135623730951}},"df":1},"z":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2}}},"k":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0},"30":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"19":{"tf":2.0},"20":{"tf":2.23606797749979},"21":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":8,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"0":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951}},"df":2}}}}}},"’":{"docs":{"19":{"tf":1.0},"2":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}}}},"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"18":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.4142135623730951},"21":{"tf":1.0},"30":{"tf":1.0}},"df":3}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"s":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"/":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"/":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}},"f":{"docs":{"27":{"tf":1.0},"30":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951}},"df":1,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"t":{"docs":{},"df":0,"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"t":{"docs":{},"df":0,"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"/":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{"19":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"14":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0}},"df":5}},"n":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.0},"9":{"tf":1.0}},"df":4,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"30":{"tf":1.0}},"df":4}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"u":{"docs":{"25":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"v":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}},"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"b":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"23":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.4142135623730951}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"27":{"tf":1.4142135623730951},"30":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2}}},"r":{"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":2.0},"21":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.0}},"df":1}},"p":{"docs":{"0":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{"12":{"tf":1.0}},"df":1}},"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}},"df":4}}}}}}}},"c":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0}},"df":2}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}},"z":{"docs":{},"df":0,"z":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}},"df":5}}},"t":{"docs":{"11":{"tf":1.4142135623730951}},"df":1,"a":{"docs":{},"df":0,"g":{"docs":{"27":{"tf":1.0}},"df":1},"k":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1,"n":{"docs":{"30":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":2.0},"13":{"tf":1.0},"27":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"’":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.4142135623730951},"15":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0},"19":{"tf":2.23606797749979},"2":{"tf":1.7320508075688772},"20":{"tf":1.0},"21":{"tf":1.7320508075688772},"24":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.7320508075688772},"28":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":14,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}}},"x":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"15":{"tf":2.0},"2":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":7}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"24":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":4},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.0}},"df":6}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1,"(":{"docs":{"25":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0},"24":{"tf":1.0}},"df":2,"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"2":{"docs":{},"df":0,"0":{"docs":{},"df":0,"1":{"docs":{},"df":0,"8":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}},"n":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}},"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{},"df":0,"m":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0},"2":{"tf":1.0},"30":{"tf":1.0}},"df":3}}},"m":{"docs":{},"df":0,"l":{"docs":{"27":{"tf":1.0},"29":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0},"17":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":5,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"p":{"docs":{"15":{"tf":1.0},"2":{"tf":1.0},"27":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{},"df":0,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0}},"df":3}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"27":{"tf":1.0}},"df":3}}}},"d":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"e":{"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"26":{"tf":1.0}},"df":5}},"i":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0}},"df":1},"p":{"docs":{"23":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0},"29":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951}},"df":3},"l":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.0}},"df":6}},"x":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"4":{"tf":1.7320508075688772}},"df":2}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.7320508075688772},"15":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"21":{"tf":1.0}},"df":5}}}}},"p":{"docs":{"8":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}},"s":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"17":{"tf":1.7320508075688772},"18":{"tf":2.0},"19":{"tf":1.7320508075688772},"21":{"tf":2.0},"23":{"tf":1.7320508075688772},"28":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":14,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,")":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2},"f":{"docs":{"30":{"tf":1.0}},"df":1}}},"v":{"docs":{"1":{"tf":2.449489742783178}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{},"df":0,"m":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.4142135623730951}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"x":{"docs":{},"df":0,"m":{"docs":{},"df":0,"l":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{"12":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"6":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":4,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,")":{"docs":{},"df":0,";":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"1":{"docs":{"4":{"tf":1.0},"9":{"tf":1.0}},"df":2},"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"19":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"[":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"a":{"docs":{"21":{"tf":1.0}},"df":1},"c":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}},"<":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}},"_":{"docs":{"15":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"s":{"docs":{"9":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"23":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":3}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1,"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":2.6457513110645907},"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":2.0},"2":{"tf":2.0},"20":{"tf":2.23606797749979},"23":{"tf":1.4142135623730951},"25":{"tf":1.7320508075688772},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"30":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":18,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"/":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":2},"l":{"docs":{"23":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"n":{"docs":{"30":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"y":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":2}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0},"25":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1,"n":{"docs":{"16":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{"22":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":2.6457513110645907},"18":{"tf":1.7320508075688772},"2":{"tf":2.0},"26":{"tf":1.0},"27":{"tf":1.0}},"df":8,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}},"’":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0},"27":{"tf":1.0}},"df":2}}},"t":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"28":{"tf":1.0}},"df":3},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"x":{"docs":{"4":{"tf":1.4142135623730951}},"df":1,"m":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.7320508075688772},"24":{"tf":1.0}},"df":4}}},"y":{"docs":{"4":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"’":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"16":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"13":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":10}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}},"df":5}}},"i":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":3}}}},"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"29":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0}},"df":3}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"21":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"29":{"tf":1.0},"30":{"tf":1.0}},"df":2},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}},"x":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":3}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"27":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"30":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"28":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0}},"df":3,"t":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"5":{"tf":1.0}},"df":6}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0}},"df":3}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}}},"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0}},"df":3}}}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}},"df":5}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}},"n":{"docs":{"28":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0}},"df":3}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.4142135623730951}},"df":1}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}},"v":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":2}}}}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":2}}}}}},"x":{"docs":{},"df":0,"m":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"title":{"root":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"16":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"13":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"26":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"29":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"21":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"29":{"tf":1.0},"30":{"tf":1.0}},"df":2},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{"7":{"tf":1.0}},"df":1}},"x":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"27":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"30":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"28":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0}},"df":1,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"26":{"tf":1.0},"5":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{"14":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"26":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0},"23":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}},"n":{"docs":{"28":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.4142135623730951}},"df":1}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"x":{"docs":{},"df":0,"m":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"When a project is forked, its bugs travel with it. A vulnerability\\ndisclosed and fixed in the parent project quietly lives on in every\\nfork created while the flaw was in the tree — unless the fork’s\\nmaintainers notice and apply the fix themselves. For large fork\\necosystems that is a lot of codebases to check by hand, and the ones\\nthat never get checked are exactly the ones attackers look at after a\\ndisclosure. Clonewatch automates that check. Given three things — a structured descriptor of the disclosed vulnerability, the parent project’s git history and an export of its issue\\ntracker, and a manifest of the forked projects you monitor, — it answers, per fork: does this tree still contain the vulnerable\\ncode, without the fix? The scan combines three techniques: Commit-history analysis. Starting from issues marked fixed,\\nresolved, closed, or labeled as bugs, it locates the commits that\\nfixed the flaw, then uses git blame to walk each fixed line back\\nto the commit that introduced it. Fork-date filtering. A fork created before the flaw existed, or\\nafter it was fixed, cannot have inherited it. The introducing and\\nfixing commit dates bound a vulnerability window; only forks\\ncreated inside it are scanned. Exact (Type I) clone detection. Annotated vulnerable and fix\\ncode fragments are matched line-for-line against each candidate\\ntree, after comments and whitespace differences are stripped. A\\nproject that contains the vulnerable fragment but not the fix is\\nflagged VULNERABLE. The result is an XML report (in the style of classic clone-detector\\noutput), a lossless JSON mirror, and a plain-text summary, plus an\\nexit code CI systems can act on. The heart of the matcher fits in a few lines: #![allow(unused)] fn main() {\\nuse clonewatch::clonedetect::{find_clones, normalize_source, NormalizationProfile}; let profile = NormalizationProfile::default();\\nlet file = normalize_source( \\"src/validation.cpp\\", \\" if (spent) { // already seen\\\\n return Invalid();\\\\n }\\\\n\\", &profile,\\n);\\nlet needle = normalize_source(\\"snippet\\", \\"if (spent) {\\\\nreturn Invalid();\\\\n}\\", &profile); let matches = find_clones(&needle.lines, &file, needle.lines.len(), 0);\\nassert_eq!(matches.len(), 1);\\nassert_eq!((matches[0].start_line, matches[0].end_line), (1, 3)); } The rest of this book walks through each stage: how sources are\\nnormalized, how matching and ratio measurement work, how the history\\nanalysis derives the window, and how to drive everything from the\\ncommand line.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"A scan runs in four stages. Each stage is a subcommand, each writes\\nits result to a plain file, and each can be re-run in isolation. The\\nfile hand-off is deliberate: between finding the fix commits and\\nscanning the corpus sits a manual step — annotating the vulnerable\\nand fix code — and the pipeline has to pause naturally around it. descriptor (cve.json) issue export parent repository \\\\ | / \\\\ v / +---------------> szz <-----------------+ | v window.json (G_f, G_b, [intro_min, fix_max]) | manifest.csv -----------> filter | v candidates.json (per-project decision + reason) annotations.json -----> build-test | v detection-test.json (snippets + exact thresholds) | v scan (parallel, per-candidate) | v report.xml / report.json / report.txt","breadcrumbs":"The scanning pipeline » The scanning pipeline","id":"1","title":"The scanning pipeline"},"10":{"body":"Lines are interned to integer ids, then a Knuth–Morris–Pratt scan\\nfinds every occurrence in O(|file| + |snippet|) — one pass, no\\nbacktracking, overlaps included. The test suite pins this\\nimplementation against a brute-force sliding-window oracle on\\nhundreds of randomized inputs; the two must agree exactly, always. Each reported CloneMatch carries the source file, the original\\nstart and end line numbers (via the line map),\\nthe matched line count, and which snippet matched.","breadcrumbs":"Finding clone blocks » How it searches","id":"10","title":"How it searches"},"11":{"body":"Besides the targeted vulnerable/fix matching, the tool can measure how\\nmuch of one tree is cloned from another — useful for confirming that a\\nproject really is a fork, and for picking which parent version it\\nforked from. The clone ratio of a target against a reference is ratio = K / T where T is the total number of normalized lines across the target’s\\nselected files and K is the number of those lines covered by at\\nleast one common block: a run of at least min_block contiguous\\nnormalized lines that also appears, contiguously, in some reference\\nfile. A line covered by several common blocks counts once. #![allow(unused)] fn main() {\\nuse clonewatch::clonedetect::{clone_ratio, FileSelector, NormalizationProfile}; let target = tempfile::tempdir().unwrap();\\nlet reference = tempfile::tempdir().unwrap(); // 10 target lines; 6 of them form a block shared with the reference.\\nlet shared = \\"s1;\\\\ns2;\\\\ns3;\\\\ns4;\\\\ns5;\\\\ns6;\\\\n\\";\\nstd::fs::write( target.path().join(\\"t.cpp\\"), format!(\\"{shared}u1;\\\\nu2;\\\\nu3;\\\\nu4;\\\\n\\"),\\n).unwrap();\\nstd::fs::write( reference.path().join(\\"r.cpp\\"), format!(\\"r1;\\\\nr2;\\\\n{shared}\\"),\\n).unwrap(); let selector = FileSelector::for_language(\\"C++\\").unwrap();\\nlet result = clone_ratio( target.path(), reference.path(), &NormalizationProfile::default(), &selector, 4, // min_block\\n).unwrap(); assert_eq!(result.total_lines, 10);\\nassert_eq!(result.cloned_lines, 6);\\nassert_eq!(result.ratio(), 0.6); }","breadcrumbs":"Clone ratios » Clone ratios","id":"11","title":"Clone ratios"},"12":{"body":"min_block is the noise floor. Single shared lines ( }, return true;) mean nothing, so the minimum accepted value is 2 and the\\ndefault is 6 — small enough to catch real shared functions, large\\nenough that boilerplate does not count. Lowering min_block can only\\ngrow K, never shrink it, so ratios at different block sizes are\\ncomparable in one direction only. The effective value is echoed in\\nevery report. One consequence worth knowing: a file with fewer normalized lines than min_block can never be covered, even by an identical reference file.\\nComparing a tree against itself yields exactly 1.0 when every selected\\nfile has at least min_block normalized lines; tiny stub files pull\\nthe self-ratio below 1. If a corpus is full of tiny files, lower min_block accordingly.","breadcrumbs":"Clone ratios » Choosing min_block","id":"12","title":"Choosing min_block"},"13":{"body":"Two properties pin the implementation down, and the test suite asserts\\nboth: a tree compared against itself (with files at or above the block\\nsize) gives exactly 1.0, and trees sharing no lines at all give\\nexactly 0.0. Symmetry is deliberately not claimed — K is\\nmeasured on the target side, so ratio(a, b) and ratio(b, a) answer\\ndifferent questions.","breadcrumbs":"Clone ratios » Sanity checks","id":"13","title":"Sanity checks"},"14":{"body":"The history stage turns “a vulnerability was disclosed” into “these\\ncommits fixed it, these commits introduced it”. Everything runs\\nagainst a local clone of the parent repository through the system git client.","breadcrumbs":"Mining fix and introducing commits » Mining fix and introducing commits","id":"14","title":"Mining fix and introducing commits"},"15":{"body":"The input is an issue-tracker export: a JSON array of issues, each\\nwith an id, state labels, linked commit hashes, and text. Only issues\\nthat are fixed, resolved, closed, or labeled bug qualify for\\nthe search. #![allow(unused)] fn main() {\\nuse clonewatch::history::read_issues; let dir = tempfile::tempdir().unwrap();\\nlet path = dir.path().join(\\"issues.json\\");\\nstd::fs::write(&path, r#\\"[ {\\"issue_id\\": \\"14247\\", \\"labels\\": [\\"Bug\\", \\"Closed\\"], \\"commits\\": [\\"b8f8019eba2c5a347d77cb1a944f2c9312b2a2a3\\"], \\"text\\": \\"Assertion failure; see CVE-2018-17144.\\"}\\n]\\"#).unwrap(); let issues = read_issues(&path).unwrap();\\nassert!(issues[0].qualifies_for_fix_search()); // labels are lowercased } The search pattern comes from the vulnerability descriptor: a\\ncase-insensitive alternation of the CVE id, the token CVE, and the\\ntop extracted keywords. match_fix_commits resolves each linked\\ncommit and keeps it when either the commit message or the\\nissue text matches — the search is recall-oriented, and which side\\nmatched is recorded per commit so a reviewer can audit the evidence. #![allow(unused)] fn main() {\\nuse clonewatch::history::{match_fix_commits, RepositoryHandle}; let repo = RepositoryHandle::open(\\"path/to/parent\\")?;\\nlet issues = clonewatch::history::read_issues(\\"issues.json\\".as_ref())?;\\nlet qualifying: Vec<_> = issues.into_iter().filter(|i| i.qualifies_for_fix_search()).collect(); let fixes = match_fix_commits(&qualifying, r\\"(?i)\\\\b(?:CVE-2018-17144|CVE)\\\\b\\", &repo)?;\\nfor detail in &fixes.details { println!(\\"{} via issue {} (message: {}, issue text: {})\\", detail.commit, detail.issue_id, detail.matched_in_message, detail.matched_in_issue_text);\\n} Ok::<(), clonewatch::history::HistoryError>(()) }","breadcrumbs":"Mining fix and introducing commits » Locating the fixing commits","id":"15","title":"Locating the fixing commits"},"16":{"body":"For each fixing commit, blame_previous_commits finds the commits\\nthat last touched the code the fix changed: Diff the fix against its first parent with zero context. For every line the fix deleted or modified, run git blame on\\nthat line at the parent revision; the commit that last modified it\\njoins the introducing set. A hunk that only inserts lines into an existing file implicates\\nthe surrounding code instead: the lines immediately above and below\\nthe insertion point are blamed, when they exist. A fix that inserts\\na missing check points at the code that should have had it;\\nreturning nothing for insertion-only fixes would silently drop the\\nwindow’s lower bound. A fix that only creates brand-new files has nothing to blame and\\ncontributes the empty set. So does a root commit. The fix commit itself can never appear in the result: blame runs at\\nthe parent, where the fix does not exist yet. Merge commits are diffed against their first parent only; no other\\nmerge special-casing is applied. The introducing set is deliberately not restricted to commits touching the same files as the fix —\\nwhen in doubt the window should widen, not narrow (see The vulnerability window).","breadcrumbs":"Mining fix and introducing commits » Tracing back with blame","id":"16","title":"Tracing back with blame"},"17":{"body":"A fork inherits a flaw only if the flaw existed at the moment of\\nforking. The introducing and fixing commit sets bound that period: intro_min = oldest committer date over the introducing set (G_b)\\nfix_max = newest committer date over the fixing set (G_f)\\nwindow = [intro_min, fix_max], both ends inclusive Taking the oldest introduction and the newest fix is the\\nconservative choice: when the commit sets are noisy, the window grows,\\nand a too-wide window costs only scan time — the clone detector still\\nhas to find the vulnerable code before anything is reported. A\\ntoo-narrow window silently skips projects, which is the one failure\\nmode this tool must not have. Dates are committer dates, not author dates: the window is about\\nwhen code entered the shared history, and rebases rewrite the\\nrelationship between the two. #![allow(unused)] fn main() {\\nuse std::collections::BTreeSet;\\nuse clonewatch::history::{compute_window, CommitRef};\\nuse chrono::{DateTime, Utc}; fn commit(hash: &str, at: &str) -> CommitRef { let at: DateTime<Utc> = at.parse().unwrap(); CommitRef { hash: hash.into(), author_date: at, committer_date: at, touched_files: vec![], parent_hashes: vec![], }\\n} let intro = BTreeSet::from([ commit(\\"aaaaaaa\\", \\"2016-12-01T10:00:00Z\\"), commit(\\"bbbbbbb\\", \\"2017-03-05T00:00:00Z\\"),\\n]);\\nlet fix = BTreeSet::from([commit(\\"fffffff\\", \\"2018-09-18T12:00:00Z\\")]); let window = compute_window(&intro, &fix).unwrap();\\nassert_eq!(window.intro_min.to_rfc3339(), \\"2016-12-01T10:00:00+00:00\\");\\nassert_eq!(window.fix_max.to_rfc3339(), \\"2018-09-18T12:00:00+00:00\\");\\nassert!(window.contains(\\"2017-06-01T00:00:00Z\\".parse().unwrap())); } If intro_min lands after fix_max, the window is inverted and compute_window refuses with an error instead of guessing: inverted\\nbounds mean the commit identification went wrong, and no downstream\\nresult would be meaningful.","breadcrumbs":"The vulnerability window » The vulnerability window","id":"17","title":"The vulnerability window"},"18":{"body":"Each monitored project carries a fork date: the manifest can declare\\nit, and otherwise it is resolved as the timestamp of the earliest\\ncommit on the repository’s default branch. The earliest commit is a\\nconservative stand-in — it can only be too early, which can only add\\ncandidates, never lose one. The filter itself is a pair of inclusive comparisons: #![allow(unused)] fn main() {\\nuse clonewatch::history::{compute_window, CommitRef};\\nuse clonewatch::registry::{ForkDate, ForkDateSource, ProjectRecord, ProjectSet};\\nuse chrono::{DateTime, Utc};\\nuse std::collections::BTreeSet; fn commit(hash: &str, at: &str) -> CommitRef { let at: DateTime<Utc> = at.parse().unwrap(); CommitRef { hash: hash.into(), author_date: at, committer_date: at, touched_files: vec![], parent_hashes: vec![] } }\\nfn project(name: &str, forked: &str) -> ProjectRecord { ProjectRecord { name: name.into(), repo_location: format!(\\"/repos/{name}\\"), declared_language: \\"C++\\".into(), fork_date: Some(ForkDate { at: forked.parse().unwrap(), source: ForkDateSource::Manifest, }), }\\n} let window = compute_window( &BTreeSet::from([commit(\\"aaaaaaa\\", \\"2016-12-01T00:00:00Z\\")]), &BTreeSet::from([commit(\\"fffffff\\", \\"2018-09-18T00:00:00Z\\")]),\\n).unwrap(); let corpus = ProjectSet::new(vec![ project(\\"early\\", \\"2016-11-01T00:00:00Z\\"), // before the flaw: safe project(\\"boundary\\", \\"2016-12-01T00:00:00Z\\"), // forked the same instant: candidate project(\\"inside\\", \\"2017-06-01T00:00:00Z\\"), // candidate project(\\"late\\", \\"2019-01-01T00:00:00Z\\"), // forked after the fix: safe\\n]).unwrap(); let candidates = corpus.filter_candidates(&window).unwrap();\\nlet names: Vec<&str> = candidates.iter().map(|p| p.name.as_str()).collect();\\nassert_eq!(names, vec![\\"boundary\\", \\"inside\\"]); } Filtering is a first cut, nothing more. A fork created inside the\\nwindow may have cherry-picked the fix — the clone detector will find\\nthe fix code and mark it FIXED. A fork created outside the window\\ncould in principle have cherry-picked the flaw; that case is not\\nmodeled, and such a project is reported FILTERED_OUT rather than\\nscanned.","breadcrumbs":"The vulnerability window » Filtering the corpus","id":"18","title":"Filtering the corpus"},"19":{"body":"Between the history analysis and the scan sits the one manual step:\\nreading the fixing and introducing commits and deciding which lines are the vulnerability and which lines are the fix. That judgment\\ncall needs a human who understands the flaw — but it happens once per\\nvulnerability, while the scan over the corpus repeats forever. The\\nannotation is written down as fragments, and build-test packages\\nthem into a machine-checkable detection test. A detection test holds: the CVE id and affected language, the normalization profile the snippets were built with, one or more VULNERABLE snippets, one or more FIX snippets, a per-snippet threshold equal to the snippet’s exact normalized\\nline count — the all-or-nothing rule from Finding clone blocks, pinned into the artifact. #![allow(unused)] fn main() {\\nuse clonewatch::clonedetect::NormalizationProfile;\\nuse clonewatch::cve::{parse_cve, StopwordSet};\\nuse clonewatch::testgen::{build_detection_test, Fragment, SnippetOrigin}; let descriptor = r#\\"{ \\"id\\": \\"CVE-2018-17144\\", \\"published\\": \\"2018-09-19T22:29:00Z\\", \\"description\\": \\"remote denial of service\\", \\"references\\": [], \\"affected_language\\": \\"C++\\", \\"affected_projects\\": [] }\\"#;\\nlet cve = parse_cve(descriptor, &StopwordSet::builtin()).unwrap(); let origin = SnippetOrigin { commit: \\"eecffe50e0c8e9e1b1f9d6b8b1e1f7a2c9d3b4a5\\".into(), file: \\"src/validation.cpp\\".into(), start_line: 12,\\n};\\nlet vulnerable = Fragment { // Seven raw lines; one is pure comment and one carries an // inline comment... source_lines: [ \\"// walk the inputs\\", \\"for (const auto& txin : tx.vin) {\\", \\" if (txin.prevout.IsNull()) {\\", \\" return state.Invalid();\\", \\" }\\", \\" spent.Mark(txin.prevout); /* no duplicate check */\\", \\"}\\", ].iter().map(|s| s.to_string()).collect(), origin: origin.clone(),\\n};\\nlet fix = Fragment { source_lines: [ \\"if (!spent.Insert(txin.prevout)) {\\", \\" return state.Invalid();\\", \\"}\\", ].iter().map(|s| s.to_string()).collect(), origin,\\n}; let test = build_detection_test( &cve, vec![vulnerable], vec![fix], &NormalizationProfile::default(),\\n).unwrap(); // ...normalize to six, and the threshold is exactly six.\\nassert_eq!(test.vulnerable_snippets[0].threshold, 6);\\nassert_eq!(test.fix_snippets[0].threshold, 3); } A fragment that normalizes to nothing (all comments, all blank) is\\nrejected immediately — it could never match anything, and silently\\nkeeping it would make the test weaker than it looks.","breadcrumbs":"Detection tests » Detection tests","id":"19","title":"Detection tests"},"2":{"body":"szz parses the descriptor, reads the issue export, and keeps the\\nissues that are fixed, resolved, closed, or labeled bug. From the\\ndescriptor it builds a case-insensitive search pattern — the CVE id,\\nthe token CVE, and the top keywords extracted from the description —\\nand collects every linked commit whose message or issue text matches:\\nthe fixing set. Each fixing commit is then blamed (see Mining fix\\nand introducing commits) to find the introducing set.\\nThe oldest introducing date and the newest fixing date become the\\nvulnerability window, persisted as window.json. filter loads the manifest of monitored projects, keeps the ones\\nmatching the affected language, resolves missing fork dates from each\\nrepository’s earliest commit, and applies the window test: forked on\\nor after the window start, on or before the window end. Every project\\ngets a decision with a human-readable reason in candidates.json —\\nincluded, filtered out, or error — so the final report can account for\\nthe whole corpus. build-test packages the manually annotated vulnerable and fix\\nfragments into a detection test. Each snippet’s match threshold is\\npinned to its exact normalized length: partial matches are worthless\\nfor deciding “does the flaw exist here”, so matching is all or\\nnothing. scan runs the clone detector over every included candidate, in\\nparallel, and classifies each: VULNERABLE (vulnerable code present,\\nfix absent), FIXED (fix present), NOT_AFFECTED (neither), plus FILTERED_OUT and ERROR carried over from filtering. Reports land\\nin the output directory in three formats.","breadcrumbs":"The scanning pipeline » Stage by stage","id":"2","title":"Stage by stage"},"20":{"body":"A vulnerability rarely lives in one contiguous block, and the fix even\\nless often. A test may carry several snippets per side, each with its\\nown exact threshold. The verdict rule treats them as evidence, not a\\nchecklist: any vulnerable snippet found (with no fix snippet)\\nmarks the project vulnerable, and any fix snippet found marks it\\nfixed. Requiring all vulnerable snippets would miss projects that\\nvendored only part of the flawed code — and missing truly vulnerable\\nprojects is the expensive failure.","breadcrumbs":"Detection tests » Multiple snippets","id":"20","title":"Multiple snippets"},"21":{"body":"save_test writes JSON with raw lines stored verbatim; load_test\\nre-derives every normalized line from the raw ones and re-checks every\\nthreshold, rejecting anything inconsistent: #![allow(unused)] fn main() { use clonewatch::clonedetect::NormalizationProfile; use clonewatch::cve::{parse_cve, StopwordSet}; use clonewatch::testgen::{build_detection_test, Fragment, SnippetOrigin};\\nuse clonewatch::testgen::{load_test, save_test}; let descriptor = r#\\"{ \\"id\\": \\"CVE-2018-17144\\", \\"published\\": \\"2018-09-19T22:29:00Z\\", \\"description\\": \\"remote denial of service\\", \\"references\\": [], \\"affected_language\\": \\"C++\\", \\"affected_projects\\": [] }\\"#; let cve = parse_cve(descriptor, &StopwordSet::builtin()).unwrap(); let origin = SnippetOrigin { commit: \\"e\\".repeat(40), file: \\"f.cpp\\".into(), start_line: 1 }; let frag = |lines: &[&str]| Fragment { source_lines: lines.iter().map(|s| s.to_string()).collect(), origin: origin.clone(), }; let test = build_detection_test( &cve, vec![frag(&[\\"a();\\", \\"b();\\"])], vec![frag(&[\\"c();\\"])], &NormalizationProfile::default(), ).unwrap();\\nlet dir = tempfile::tempdir().unwrap();\\nlet path = dir.path().join(\\"detection-test.json\\");\\nsave_test(&test, &path).unwrap();\\nassert_eq!(load_test(&path).unwrap(), test); } The stored normalization profile travels with the test so the scan is\\nguaranteed to normalize candidate files the same way the snippets were\\nnormalized. Mixing profiles would break line-for-line equality in\\nways that are miserable to debug.","breadcrumbs":"Detection tests » On disk","id":"21","title":"On disk"},"22":{"body":"A scan produces three artifacts in the output directory: file purpose report.xml clone-detector-style XML, schema-validated report.json lossless JSON mirror of the full report report.txt fixed-width human summary with totals","breadcrumbs":"Reports » Reports","id":"22","title":"Reports"},"23":{"body":"The XML follows the field vocabulary of classic clone-detector output\\n( sourceFile, lineCount, processingTime), one <project> element\\nper verdict, one <block> per located match: <?xml version=\\"1.0\\" encoding=\\"UTF-8\\"?>\\n<clonewatch cve=\\"CVE-2018-17144\\" timestamp=\\"2018-10-07T00:00:00Z\\" toolVersion=\\"0.1.0\\" corpusSize=\\"5\\" filteredCount=\\"4\\"> <settings> <setting name=\\"minBlock\\" value=\\"6\\"/> </settings> <project name=\\"fork-hotcoin\\" status=\\"VULNERABLE\\" processingTime=\\"0.123\\"> <block match=\\"vulnerable\\" snippetIndex=\\"0\\" sourceFile=\\"src/validation.cpp\\" startLineNumber=\\"100\\" endLineNumber=\\"119\\" lineCount=\\"20\\"/> </project>\\n</clonewatch> processingTime is wall seconds with three decimals. The structure is\\ndescribed by schema/report.xsd, shipped with the crate, and validate_xml enforces the same rules plus the cross-field invariants\\na grammar cannot see: a VULNERABLE project must have vulnerable\\nblocks and no fix blocks, FIXED must have fix blocks, NOT_AFFECTED\\nmust have none, verdicts must be sorted by project name, and filteredCount can never exceed corpusSize. #![allow(unused)] fn main() {\\nuse std::collections::BTreeMap;\\nuse clonewatch::clonedetect::{CloneMatch, ProjectVerdict};\\nuse clonewatch::report::{parse_xml, to_xml_string, validate_xml, ScanReport}; let verdict = ProjectVerdict::classify( \\"fork-hotcoin\\", vec![CloneMatch { source_file: \\"src/validation.cpp\\".into(), start_line: 100, end_line: 119, line_count: 20, snippet_index: 0, }], vec![], 123, vec![],\\n);\\nlet report = ScanReport::new( \\"CVE-2018-17144\\", \\"2018-10-07T00:00:00Z\\".parse().unwrap(), 5, 4, vec![verdict], BTreeMap::from([(\\"minBlock\\".to_string(), \\"6\\".to_string())]),\\n); let xml = to_xml_string(&report);\\nvalidate_xml(&xml).unwrap();\\nassert_eq!(parse_xml(&xml).unwrap(), report); // full round trip }","breadcrumbs":"Reports » The XML report","id":"23","title":"The XML report"},"24":{"body":"Reports are a hard contract: two runs over identical inputs with\\nidentical settings produce byte-identical XML and JSON, except for\\nthe timestamp and processingTime/ elapsed_ms fields. Worker count\\nincluded — --jobs 1 and --jobs 8 yield the same bytes modulo those\\nfields, which is why the settings echo records everything that can\\ninfluence the result and deliberately omits the job count, which\\ncannot. That contract is what makes golden-file testing, report diffing, and\\n“did anything change since yesterday’s scan” automation possible.","breadcrumbs":"Reports » Determinism","id":"24","title":"Determinism"},"25":{"body":"report.txt is for humans: scan of CVE-2018-17144 at 2018-10-07T00:00:00Z (tool 0.1.0)\\ncorpus 5 projects, 4 scanned after filtering PROJECT STATUS VULN FIX TIME(S)\\nfork-dupcoin VULNERABLE 1 0 0.004\\nfork-hotcoin VULNERABLE 1 0 0.003\\nfork-oldcoin FILTERED_OUT 0 0 0.000\\nfork-othercoin NOT_AFFECTED 0 0 0.002\\nfork-patchcoin FIXED 0 1 0.003 TOTALS: VULNERABLE 2, FIXED 1, NOT_AFFECTED 1, FILTERED_OUT 1, ERROR 0 Every project from the manifest appears — scanned or not — so the\\nreport always accounts for the whole corpus.","breadcrumbs":"Reports » The summary","id":"25","title":"The summary"},"26":{"body":"The clonewatch binary exposes each pipeline stage as a subcommand: clonewatch szz derive the vulnerability window\\nclonewatch filter filter the corpus by language and fork date\\nclonewatch build-test package annotated fragments into a detection test\\nclonewatch scan run clone detection over the candidates\\nclonewatch ratio measure cloned-code ratio between two trees","breadcrumbs":"Command line reference » Command line reference","id":"26","title":"Command line reference"},"27":{"body":"Common flags, all overriding the config file: flag meaning --config <file> TOML configuration file --cve <file> vulnerability descriptor (JSON) --manifest <file> monitored-project manifest (CSV) --issues <file> issue-tracker export (JSON) --repo <dir> parent repository --test <file> detection test --out <dir> output directory (stage files + reports) --jobs <n> scan worker count --language <tag> corpus language filter --min-block <n> minimum shared-block length for ratio --stopwords <file> stopword list for keyword extraction Subcommand-specific: szz --top-k <n> (keyword count in the issue\\npattern), filter --window <file>, scan --candidates <file>, ratio --target <dir> --reference <dir>, and build-test --annotations <file>.","breadcrumbs":"Command line reference » Flags","id":"27","title":"Flags"},"28":{"body":"$ clonewatch szz --cve cve.json --issues issues.json --repo ./parent --out out/\\n$ clonewatch filter --cve cve.json --manifest manifest.csv --out out/\\n$ # ... annotate the vulnerable and fix code, write annotations.json ...\\n$ clonewatch build-test --cve cve.json --annotations annotations.json --out out/\\n$ clonewatch scan --out out/ --jobs 8\\n$ echo $?\\n2 Exit codes for scan: 0 no vulnerable projects, 2 at least one\\nvulnerable project, 1 operational error. All other subcommands use 0/ 1.","breadcrumbs":"Command line reference » A full run","id":"28","title":"A full run"},"29":{"body":"Everything flags can say, a TOML file can say once: cve_descriptor_path = \\"cve.json\\"\\nmanifest_path = \\"manifest.csv\\"\\nissue_export_path = \\"issues.json\\"\\nparent_repo_path = \\"./parent\\"\\noutput_dir = \\"out\\"\\nparallelism = 8\\nmin_block = 6\\ntop_k_keywords = 5\\nlanguage_filter = \\"C++\\" # defaults to the descriptor\'s language\\nfile_extensions = [] # override the language-derived set\\nexclude_dirs = [] # e.g. [\\"test\\", \\"doc\\"], opt-in [profile]\\nline_comment_markers = [\\"//\\"]\\nblock_comment_delims = [[\\"/*\\", \\"*/\\"]]\\ncollapse_internal_whitespace = true\\ndrop_blank_lines = true The effective settings are echoed inside every report.","breadcrumbs":"Command line reference » The configuration file","id":"29","title":"The configuration file"},"3":{"body":"scan is automation-friendly: code meaning 0 scan completed, no project is VULNERABLE 2 scan completed, at least one project is VULNERABLE 1 operational error (bad inputs, unreadable files) Findings and failures are distinguishable in CI without parsing\\nanything.","breadcrumbs":"The scanning pipeline » Exit codes","id":"3","title":"Exit codes"},"30":{"body":"Manifest — UTF-8 CSV, header name,repo,language,fork_date, # lines are comments. fork_date is RFC 3339 or empty (meaning:\\nresolve from the repository’s earliest commit). Relative repo paths\\nare taken relative to the manifest’s directory. Rows with an empty repo are skipped with a warning. name,repo,language,fork_date\\nfork-hotcoin,forks/fork-hotcoin,C++,2017-03-01T00:00:00Z\\nfork-dupcoin,forks/fork-dupcoin,C++, Descriptor — JSON with id, published (RFC 3339), description, references[], affected_language, affected_projects[], optional protocol_level (a protocol-level\\nflaw is marked not code-specific), optional releases\\n( {\\"introduced\\": ..., \\"fixed\\": ...}). Issue export — JSON array of {\\"issue_id\\", \\"labels\\": [], \\"commits\\": [], \\"text\\"}; labels are\\nlowercased on load, commits are hashes in the parent repository. Annotations — JSON with vulnerable and fix fragment arrays;\\neach fragment is {\\"source_lines\\": [...], \\"origin\\": {\\"commit\\", \\"file\\", \\"start_line\\"}}. Stopwords — one token per line, # comments. A built-in English\\nlist is used when no file is given.","breadcrumbs":"Command line reference » File formats","id":"30","title":"File formats"},"4":{"body":"Two code fragments are Type I clones when they are identical after\\ncomments and whitespace differences are removed. That is the only\\nclone class this tool matches: no identifier renaming (Type II), no\\nadded or deleted lines (Type III). Exact matching trades recall for\\nprecision — a match means the code really is there, byte for byte\\nmodulo formatting — and that precision is what makes a VULNERABLE\\nverdict trustworthy. Everything therefore runs on normalized lines. A NormalizationProfile controls the transformation: field default effect line_comment_markers [\\"//\\"] text from a marker to end of line is dropped block_comment_delims [(\\"/*\\",\\"*/\\")] delimited spans are dropped, across lines collapse_internal_whitespace true runs of spaces/tabs become one space drop_blank_lines true lines empty after the above vanish Leading and trailing whitespace is always trimmed. Quoted string\\nspans shield comment markers, so \\"http://example.com\\" survives. An\\nunterminated block comment is treated as a comment to end of file and\\nreported as a warning, never a hard error — vendored code is messy and\\na scan must not die on it. #![allow(unused)] fn main() {\\nuse clonewatch::clonedetect::{normalize_source, NormalizationProfile}; let raw = r#\\" int x = 1; // init /* setup */ int y;\\nurl = \\"http://example.com\\"; // trailing note\\n\\"#; let out = normalize_source(\\"demo.cpp\\", raw, &NormalizationProfile::default());\\nassert_eq!( out.lines, vec![ \\"int x = 1;\\", \\"int y;\\", r#\\"url = \\"http://example.com\\";\\"#, ],\\n);\\nassert_eq!(out.line_map, vec![1, 3, 4]); }","breadcrumbs":"Normalization and Type I clones » Normalization and Type I clones","id":"4","title":"Normalization and Type I clones"},"5":{"body":"Normalization deletes and rewrites lines, but reports must point at\\nthe file as the author sees it. Each NormalizedFile carries a line_map: entry i is the original 1-based line number of\\nnormalized line i. In the example above the blank line 2 vanished,\\nso the second surviving line maps back to line 3. Every clone match\\nreports original line numbers through this map.","breadcrumbs":"Normalization and Type I clones » The line map","id":"5","title":"The line map"},"6":{"body":"Normalizing already-normalized text changes nothing: #![allow(unused)] fn main() {\\nuse clonewatch::clonedetect::{normalize_source, NormalizationProfile}; let profile = NormalizationProfile::default();\\nlet once = normalize_source(\\"f\\", \\"a(); // note\\\\n\\\\n b();\\", &profile);\\nlet twice = normalize_source(\\"f\\", &once.lines.join(\\"\\\\n\\"), &profile);\\nassert_eq!(once.lines, twice.lines); } This matters operationally: detection-test snippets are stored in both\\nraw and normalized form, and loading a test re-normalizes the raw\\nlines to verify nobody hand-edited the normalized copy.","breadcrumbs":"Normalization and Type I clones » Idempotence","id":"6","title":"Idempotence"},"7":{"body":"find_clones answers one question: at which positions does a snippet\\noccur in a file as a contiguous run of equal normalized lines?","breadcrumbs":"Finding clone blocks » Finding clone blocks","id":"7","title":"Finding clone blocks"},"8":{"body":"A snippet matches all or nothing. The threshold argument must\\nequal the snippet’s full line count; there is no partial credit. The\\nreasoning: a fork that contains only half the vulnerable block has\\ndiverged enough that no text-level tool can say whether the flaw\\nsurvived, and false alarms erode trust faster than anything. Detecting\\nprojects that truly carry the full vulnerable code matters more than\\ncatching every mutation of it. (Mutated clones are exactly what the\\nexact-length rule gives up; see Detection tests\\nfor how multiple snippets soften that.) #![allow(unused)] fn main() {\\nuse clonewatch::clonedetect::{find_clones, normalize_source, NormalizationProfile}; let profile = NormalizationProfile::default();\\nlet hay = normalize_source( \\"src/checks.cpp\\", \\"begin();\\\\nfree(p);\\\\nuse(p);\\\\nfree(p);\\\\nend();\\\\n\\", &profile,\\n);\\nlet needle = vec![\\"free(p);\\".to_string(), \\"use(p);\\".to_string(), \\"free(p);\\".to_string()]; let matches = find_clones(&needle, &hay, 3, 0);\\nassert_eq!(matches.len(), 1);\\nassert_eq!(matches[0].start_line, 2);\\nassert_eq!(matches[0].end_line, 4);\\nassert_eq!(matches[0].line_count, 3); }","breadcrumbs":"Finding clone blocks » The exact-length rule","id":"8","title":"The exact-length rule"},"9":{"body":"Occurrences may overlap; all of them are reported. With haystack a b a b a and needle a b a, there are matches at positions 1\\nand 3: #![allow(unused)] fn main() {\\nuse clonewatch::clonedetect::{find_clones, normalize_source, NormalizationProfile}; let profile = NormalizationProfile::default();\\nlet hay = normalize_source(\\"f\\", \\"a\\\\nb\\\\na\\\\nb\\\\na\\", &profile);\\nlet needle: Vec<String> = [\\"a\\", \\"b\\", \\"a\\"].iter().map(|s| s.to_string()).collect(); let starts: Vec<usize> = find_clones(&needle, &hay, 3, 0) .into_iter() .map(|m| m.start_line) .collect();\\nassert_eq!(starts, vec![1, 3]); }","breadcrumbs":"Finding clone blocks » Overlaps are reported","id":"9","title":"Overlaps are reported"}},"docInfo":{"0":{"body":226,"breadcrumbs":2,"title":1},"1":{"body":76,"breadcrumbs":4,"title":2},"10":{"body":51,"breadcrumbs":4,"title":1},"11":{"body":106,"breadcrumbs":4,"title":2},"12":{"body":85,"breadcrumbs":4,"title":2},"13":{"body":39,"breadcrumbs":4,"title":2},"14":{"body":20,"breadcrumbs":8,"title":4},"15":{"body":125,"breadcrumbs":7,"title":3},"16":{"body":115,"breadcrumbs":7,"title":3},"17":{"body":161,"breadcrumbs":4,"title":2},"18":{"body":165,"breadcrumbs":4,"title":2},"19":{"body":189,"breadcrumbs":4,"title":2},"2":{"body":162,"breadcrumbs":4,"title":2},"20":{"body":51,"breadcrumbs":4,"title":2},"21":{"body":113,"breadcrumbs":3,"title":1},"22":{"body":27,"breadcrumbs":2,"title":1},"23":{"body":145,"breadcrumbs":3,"title":2},"24":{"body":56,"breadcrumbs":2,"title":1},"25":{"body":72,"breadcrumbs":2,"title":1},"26":{"body":43,"breadcrumbs":6,"title":3},"27":{"body":93,"breadcrumbs":4,"title":1},"28":{"body":58,"breadcrumbs":5,"title":2},"29":{"body":48,"breadcrumbs":5,"title":2},"3":{"body":30,"breadcrumbs":4,"title":2},"30":{"body":100,"breadcrumbs":5,"title":2},"4":{"body":143,"breadcrumbs":6,"title":3},"5":{"body":42,"breadcrumbs":5,"title":2},"6":{"body":47,"breadcrumbs":4,"title":1},"7":{"body":13,"breadcrumbs":6,"title":3},"8":{"body":88,"breadcrumbs":6,"title":3},"9":{"body":43,"breadcrumbs":5,"title":2}},"length":31},"lang":"English"}}'));